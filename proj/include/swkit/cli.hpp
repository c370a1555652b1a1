#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "swkit/density.hpp"

namespace swkit::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2, kGuardExceeded = 3 };

/// Validated job. Either a global datum or a single local place (den only).
struct JobSpec {
    std::string command;
    std::optional<GlobalHermDatum> datum;
    std::optional<PlaceDatum> local;
    long q = 3;
    std::vector<int> r_list{0};
    std::string suite = "all";
    int budget = -1;
    std::optional<double> guard_scale;
    std::string out_path;
};

/// Schema check of an input document for the given command; throws InputError.
JobSpec parse_job(const std::string& command, const nlohmann::json& doc);

nlohmann::json datum_to_json(const GlobalHermDatum& g);

struct CommandResult {
    nlohmann::json doc;
    int exit_code = kOk;
};

CommandResult cmd_den(const JobSpec& job);
CommandResult cmd_derivative(const JobSpec& job);
CommandResult cmd_verify(const JobSpec& job);
/// Runs the acceptance criteria; a summary table goes to `table`.
CommandResult cmd_selftest(const JobSpec& job, std::ostream& table);

/// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace swkit::cli
