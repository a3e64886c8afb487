#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schemeconn {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitFinding = 3;
inline constexpr int kExitCap = 4;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace schemeconn
