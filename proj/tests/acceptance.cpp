// Acceptance suite: runs every verification suite at its pinned budget and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "ringlab/verify.hpp"

int main() {
  struct Criterion {
    const char* suite;
    double limit_seconds;
  };
  // suite order follows the numbered acceptance criteria; limits are part
  // of the criteria and are enforced, not just reported
  const Criterion criteria[] = {
      {"radical-agreement", 60.0}, {"wedderburn-roundtrip", 120.0},
      {"freenil-towers", 30.0},    {"aut-products", 600.0},
      {"poly-bounds", 60.0},       {"radical-nil", 30.0},
      {"tower-descent", 60.0},     {"orbits", 10.0},
      {"free-evaluation", 60.0},   {"unitalization", 10.0},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    ringlab::VerificationReport rep = ringlab::run_verify_suite(c.suite, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = rep.ok() && secs < c.limit_seconds;
    if (!ok) ++failures;
    std::printf("[%2d/10] %-22s %s  (%zu cases, %.1fs, limit %.0fs)\n", index, c.suite,
                ok ? "PASS" : "FAIL", rep.cases.size(), secs, c.limit_seconds);
    if (!rep.ok())
      for (const ringlab::CaseResult& cs : rep.cases)
        if (cs.verdict == "fail") std::printf("        %s: %s\n", cs.id.c_str(), cs.witness.c_str());
    if (rep.ok() && secs >= c.limit_seconds)
      std::printf("        exceeded the %.0fs budget\n", c.limit_seconds);
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}
