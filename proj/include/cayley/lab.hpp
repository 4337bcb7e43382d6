#ifndef CAYLEY_LAB_HPP
#define CAYLEY_LAB_HPP

#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley::lab {

// Exit codes: 0 success, 2 config error, 3 budget abort, 4 invariant
// violation detected during the run.
enum ExitCode { kOk = 0, kConfigError = 2, kBudgetAbort = 3, kInvariantViolation = 4 };

struct Diagnostic {
    std::string field;
    std::string message;
};

struct RunReport {
    int exit_code = kOk;
    std::vector<std::string> lines; // verdict summary lines, echoed to stdout
    std::vector<std::string> files; // files written
    double wall_seconds = 0;        // reported on stdout only, never in files
};

GroupSpec group_spec_from_json(const std::string& json_text);
std::string group_spec_to_json(const GroupSpec& spec);

// Full schema check without execution, plus a dry-run cost estimate from
// growth formulas (closed-form where available, extrapolated otherwise).
std::vector<Diagnostic> validate_config(const std::string& config_json);

// Executes the experiment described by the config.  Deterministic: identical
// configs and thread counts give byte-identical output files; counts are
// thread-count independent.
RunReport run_config(const std::string& config_json, const std::string& experiment_override = "",
                     const std::string& out_override = "", int threads_override = 0);

} // namespace cayley::lab

#endif
