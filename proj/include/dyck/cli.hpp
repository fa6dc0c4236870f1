#ifndef DYCK_CLI_HPP
#define DYCK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dyck::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1; // "no" answers, failed verification, domain errors
inline constexpr int kUsage = 2;    // unknown subcommand, malformed number, bad flags

/// Runs the `dyck` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dyck::cli

#endif
