#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "assort/word_spec.hpp"

namespace assort {

enum class Family { uniform, adversarial, best_case, full_universe };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

struct DatasetSpec {
  Family family = Family::uniform;
  std::size_t n = 0;
  /// Range multiplier for the uniform family: values come from
  /// [0, beta * n * (w - 1)). Ignored by the other families.
  double beta = 1.0;
  std::uint64_t seed = 0;
  unsigned w = kHostBits;
};

/// n distinct values drawn uniformly without replacement from
/// [0, beta * n * (w - 1)). Throws Error{infeasible_range} when that interval
/// exceeds 2^(w-1) or holds fewer than n values.
std::vector<word_t> gen_uniform(const DatasetSpec& spec);

/// t * (w - 1) * n for t = 0..n-1: every pass of the driver can practice only
/// its minimum. Requires (n - 1)(w - 1)n < 2^(w-1).
std::vector<word_t> gen_adversarial(std::size_t n, const WordSpec& spec);

inline constexpr std::uint64_t kBestCaseSeed = 0x5eed'0b35'7ca5'e000ULL;

/// delta followed by n - 1 other distinct values from
/// [delta, delta + (w - 1)n - 1] (clipped to the untagged universe), shuffled.
/// All of them fit in a single pass.
std::vector<word_t> gen_best_case(std::size_t n, const WordSpec& spec,
                                  word_t delta,
                                  std::uint64_t seed = kBestCaseSeed);

/// n distinct values from the whole universe [0, 2^w).
std::vector<word_t> gen_full_universe(std::size_t n, const WordSpec& spec,
                                      std::uint64_t seed);

/// Dispatches on the family. Adversarial output is shuffled by the seed and
/// best-case output starts at a seed-chosen minimum.
std::vector<word_t> generate(const DatasetSpec& spec);

}  // namespace assort
