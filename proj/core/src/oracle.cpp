#include "assort/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace assort {

std::vector<word_t> oracle_sort(std::span<const word_t> values) {
  std::vector<word_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

PassTally verify_pass_tally(std::span<const word_t> values, word_t delta,
                            std::size_t n, const WordSpec& spec) {
  PassTally tally;
  tally.region_length = values.size();
  tally.delta = delta;

  std::unordered_set<word_t> quotients;
  std::size_t in_range = 0;
  const word_t width = spec.record_bits();
  for (const word_t v : values) {
    const word_t q = (v - delta) / width;
    if (q < n) {
      ++in_range;
      quotients.insert(q);
    } else {
      ++tally.deferred_count;
      tally.deferred_min = std::min(tally.deferred_min.value_or(v), v);
    }
  }
  tally.node_count = quotients.size();
  tally.idle_count = in_range - quotients.size();
  return tally;
}

std::size_t predict_worst_pass_bound(std::size_t n, word_t m,
                                     const WordSpec& spec) {
  if (n <= 1 || m <= 1) {
    return 1;
  }
  const word_t per_pass = static_cast<word_t>(spec.record_bits()) * n - 1;
  const word_t span = m - 1;
  return static_cast<std::size_t>(std::max<word_t>(1, (span + per_pass - 1) / per_pass));
}

std::uint64_t predict_average_work(std::size_t n, double beta,
                                   const WordSpec& /*spec*/) {
  return static_cast<std::uint64_t>(
      std::ceil(beta * static_cast<double>(n)));
}

}  // namespace assort
