#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icolor {

struct CommandResult {
    enum class Status { Ok, None, Timeout, Error };
    Status status = Status::Ok;
    std::vector<std::string> artifacts; // files written
    std::vector<std::string> summary;   // human-readable lines
};

// Dispatches one subcommand (verify, spectrum, gadget, thickness, schedule,
// demo-gaps, export-dot). Prints summary lines to `out`, problems to `err`.
CommandResult run_command(const std::vector<std::string>& args,
                          std::ostream& out, std::ostream& err);

// Exit code: 0 for ok and for an honest negative answer, 3 for a budget
// timeout, 2 for errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace icolor
