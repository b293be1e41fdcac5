#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "howechar/kernels.hpp"

namespace howechar {

// The invariant suite behind `howechar verify` and the acceptance binary.
// Each check compares a library path against an independent route to the
// same number (an oracle, a closed form, or a second formula).
struct CheckResult {
  int id = 0;
  std::string title{};
  bool passed = false;
  std::string detail{};
  double seconds = 0;
};

struct VerifyOptions {
  bool quick = false;  // smaller sweeps, 1e5 Monte Carlo samples
  std::uint64_t seed = 20240601;
  kernels::Exec exec = kernels::Exec::parallel;
};

inline constexpr int kCheckCount = 11;

// id in [1, kCheckCount].  Domain errors inside a check are reported as a
// failure with the error text, not rethrown.
CheckResult run_check(int id, const VerifyOptions& opt = {});
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt = {});

}  // namespace howechar
