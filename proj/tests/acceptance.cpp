// Acceptance criteria 1..10; one line per criterion, exit status 0 iff all pass.
#include <cstdlib>
#include <iostream>
#include <string>

#include "swkit/suites.hpp"

int main(int argc, char** argv) {
    swkit::AcceptanceOptions opts;
    if (const char* env = std::getenv("SWKIT_ACCEPT_WEYL_MAX")) opts.weyl_max_d = std::atoi(env);
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--weyl-max") opts.weyl_max_d = std::atoi(argv[i + 1]);
    bool ok = true;
    swkit::run_acceptance(opts, [&](const swkit::CriterionResult& r) {
        ok = ok && r.pass;
        std::cout << swkit::format_criterion(r) << std::endl;
    });
    std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return ok ? 0 : 1;
}
