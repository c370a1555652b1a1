#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "swkit/density.hpp"

// Verification suites shared by `swkit verify`, `swkit selftest` and the
// acceptance test binary.
namespace swkit {

struct CheckRecord {
    std::string name;
    nlohmann::json inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    int budget = 0;
    std::vector<CheckRecord> checks;

    bool pass() const;
    std::size_t failures() const;
    void append(const SuiteResult& other);
};

/// Suites: cy, fe, weyl, springer, qbinom, oracle, all.
const std::vector<std::string>& suite_names();
/// Size parameter used when no budget is given (see the README).
int default_budget(const std::string& suite);
/// Throws InputError for an unknown suite or a negative budget.
SuiteResult run_suite(const std::string& suite, int budget);

/// Individual pieces, also used by the acceptance criteria.
SuiteResult cy_checks(int max_total_valuation);
SuiteResult selfdual_density_checks(int max_n);
SuiteResult functional_equation_checks(int max_size);
SuiteResult weyl_checks(int max_d);
SuiteResult springer_checks(int max_t);
SuiteResult qbinom_checks(int max_t);
SuiteResult naive_den_checks(int max_size);
SuiteResult isometry_checks();
SuiteResult grassmannian_checks();
SuiteResult corpus_derivative_checks(const std::vector<GlobalHermDatum>& corpus, int r_max);
SuiteResult corpus_even_symmetry_checks(const std::vector<GlobalHermDatum>& corpus);

/// JSON rendering of den_local values for the golden file: q, then one entry
/// per (kind, lambda) with decimal coefficient strings. Deterministic bytes.
std::string den_local_table(long q, const std::vector<PlaceKind>& kinds, const std::vector<Partition>& partitions,
                            bool use_oracle = false);
/// Embedded golden document for {inert, split} x {(1), (2), (1,1), (2,1)} at q = 3.
const std::string& golden_den_local();

constexpr std::uint64_t kCorpusSeed = 20261015;
constexpr std::size_t kCorpusSize = 50;
std::vector<GlobalHermDatum> acceptance_corpus();

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::string detail;
};

struct AcceptanceOptions {
    int weyl_max_d = 5;
};

/// Runs one criterion (1..10), timing it; a criterion fails if any check
/// fails, an exception escapes, or the time limit is exceeded.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_criterion(const CriterionResult& r);

}  // namespace swkit
