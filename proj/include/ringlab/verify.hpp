#ifndef RINGLAB_VERIFY_HPP
#define RINGLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

struct CaseResult {
  std::string id;
  std::string verdict; // "pass", "fail" or "skip"
  std::string witness; // reproduction hint or counterexample
  int64_t ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  size_t passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0; }
};

// Suite names, in acceptance-criterion order.
const std::vector<std::string>& verify_suite_names();

// Runs one suite; the seed only affects suites with randomized cases.
VerificationReport run_verify_suite(const std::string& name, uint64_t seed);

// Serializations. Timing fields are zeroed unless `timings` is set so that
// reports are byte-identical across runs with the same seed.
std::string report_text(const VerificationReport& rep, bool timings = false);
std::string report_json(const VerificationReport& rep, bool timings = false);

} // namespace ringlab

#endif
