#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mathbook::cli {

/// Runs one invocation; args exclude the program name. Exit codes: 0 success,
/// 1 domain error (error name on `err`), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

/// Every "noun verb" pair the CLI accepts.
std::vector<std::string> subcommand_paths();

}  // namespace mathbook::cli
