#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace borsuk::cli {

/// Runs one subcommand. args[0] is the program name. Returns 0 on success,
/// 1 on invalid arguments (usage goes to `err`), 2 on runtime failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace borsuk::cli
