// Acceptance runner: executes every verification criterion and prints one
// pass/fail line per criterion. Exit code 0 iff all binding criteria pass.

#include <cstdio>
#include <cstdlib>

#include "btz/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  if (const char* env = std::getenv("BTZ_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }

  using btz::verify::CheckResult;
  const CheckResult criteria[] = {
      btz::verify::check_algebra(seed),                   // 1
      btz::verify::check_h3_theorem(seed),                // 2
      btz::verify::check_h4_theorem(seed),                // 3
      btz::verify::check_iota_equivalence(seed),          // 4
      btz::verify::check_exclusion_lemma(seed),           // 5
      btz::verify::check_lateral_roundtrip(seed),         // 6
      btz::verify::check_oracle_equivalence(seed),        // 7
      btz::verify::check_representative_invariance(seed), // 8
      btz::verify::check_singularity_invariance(seed),    // 9
      btz::verify::check_psi_chart(seed),                 // 10
      btz::verify::check_ads5_conjecture(seed),           // 11
  };

  bool all_pass = true;
  int idx = 0;
  for (const CheckResult& r : criteria) {
    ++idx;
    const char* mark = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
    std::printf("[%s] criterion %2d: %s — %s\n", mark, idx, r.name.c_str(),
                r.detail.c_str());
    if (!r.informational && !r.pass) all_pass = false;
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all_pass ? 0 : 1;
}
