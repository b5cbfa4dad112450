#pragma once

// Command-line front end. parse_invocation() turns argv into a validated
// Invocation; execute() runs it against explicit streams so the whole tool is
// testable in-process.
//
// Exit codes: 0 ok, 1 check found violations, 2 usage, 3 parse, 4 domain, 5 io.

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ultraword::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kParse = 3, kDomain = 4, kIo = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Invocation {
    std::string command;
    std::map<std::string, std::string> flags;  ///< flag name without dashes -> value ("true" for switches)
    std::optional<std::string> output;          ///< --output path; stdout when absent
    bool help = false;                          ///< help text was requested and already rendered
    std::string help_text;
};

/// argv excludes the program name. Throws UsageError naming the offending flag.
Invocation parse_invocation(const std::vector<std::string>& argv);

/// Runs a parsed invocation; returns the exit code. Diagnostics go to err as
/// a single line; the artifact goes to out (or the --output file).
int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse + execute with every error mapped to its exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// The documented command names, in help order.
const std::vector<std::string>& commands();

}  // namespace ultraword::cli
