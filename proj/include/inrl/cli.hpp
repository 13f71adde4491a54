#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inrl::cli {

/// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_fails = 1;  ///< property or axiom fails; witness on `out`
inline constexpr int exit_invalid = 2;

/// Runs one command. `args` excludes the program name. A FILE argument of
/// "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace inrl::cli
