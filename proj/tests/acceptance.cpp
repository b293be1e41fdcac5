// One line per acceptance criterion, full sizes, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <map>

#include "howechar/kernels.hpp"
#include "howechar/verify.hpp"

int main() {
  using namespace howechar;
  kernels::apply_thread_cap_from_env();
  // seconds allowed per criterion, where one is stated
  const std::map<int, double> limits{{1, 30}, {3, 120}, {4, 60}, {9, 180}};
  int failed = 0;
  for (int id = 1; id <= kCheckCount; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r = run_check(id);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string note;
    if (auto it = limits.find(id); it != limits.end() && secs > it->second) {
      r.passed = false;
      note = " [over the " + std::to_string(static_cast<int>(it->second)) + " s limit]";
    }
    if (!r.passed) ++failed;
    std::printf("%s  %2d  %-46s %7.2fs  %s%s\n", r.passed ? "PASS" : "FAIL", id, r.title.c_str(), secs,
                r.detail.c_str(), note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", kCheckCount - failed, kCheckCount);
  return failed ? 1 : 0;
}
