#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotConstructible = 3;

/// Runs the command line. `args` excludes the program name. stdin is read
/// only for "--g6 -" / "--edges -".
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace invol::cli
