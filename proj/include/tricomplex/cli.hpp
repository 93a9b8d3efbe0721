#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tricomplex/verify.hpp"

namespace tricomplex::cli {

/// Exit codes: 0 success, 1 bad flags or failed command, 2 a verify suite failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// kExitOk when every row passed, else kExitVerifyFailed.
int verify_exit_code(const std::vector<CheckRow>& rows);

int run(int argc, char** argv);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricomplex::cli
