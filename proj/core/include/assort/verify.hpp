#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "assort/generators.hpp"

namespace assort {

/// Largest n a family can generate at width w without leaving the universe.
std::size_t max_feasible_n(Family family, unsigned w, double beta = 1.0);

/// Tag-clobbering inputs: {q(w-1)} plus {Q(w-1)+k : k < c}, listed for every
/// q < Q <= c < w. Retrieval with delta = 0 expands node Q across node q's
/// tag.
struct HazardCase {
  unsigned w;
  std::vector<word_t> values;
};
std::vector<HazardCase> hazard_cases(unsigned w);

/// Same construction with 0 prepended, so that the hazard survives the
/// driver choosing delta = min.
std::vector<HazardCase> anchored_hazard_cases(unsigned w);

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<unsigned> widths{4, 8, 16, kHostBits};
  std::size_t max_n = 4096;
};

struct SuiteOutcome {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Reproduction hint for the first failure (seed, width, family).
  std::string first_failure;
};

struct VerifySummary {
  std::vector<SuiteOutcome> suites;

  bool passed() const noexcept;
  std::size_t checks() const noexcept;
  std::size_t failures() const noexcept;
};

/// Runs the property suites used by `assort verify`: oracle equivalence,
/// pass counts, tally oracle, clobber regression and duplicate rejection.
/// With trials == 0 nothing runs.
VerifySummary run_verification(const VerifyOptions& options);

}  // namespace assort
