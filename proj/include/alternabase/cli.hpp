#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alternabase/base.hpp"

namespace alternabase {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUsage = 64;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-oracle consistency checks over the first `prefix_length` letters.
std::vector<CheckResult> verify_profile(const ParryProfile& profile, std::size_t prefix_length);

/// Entry point of the `alternabase` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace alternabase
