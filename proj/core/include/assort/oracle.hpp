#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "assort/sort.hpp"

namespace assort {

/// Comparison-sort baseline for differential testing. Allocates freely.
std::vector<word_t> oracle_sort(std::span<const word_t> values);

/// Recomputes the counters a practice pass must report, directly from the
/// value set: n_d is the number of distinct in-range quotients, n_c the rest
/// of the in-range values, n_d' and delta' summarise the out-of-range ones.
/// `n` is the region length the pass runs on.
PassTally verify_pass_tally(std::span<const word_t> values, word_t delta,
                            std::size_t n, const WordSpec& spec);

/// Upper bound on passes when each pass sorts only one value:
/// ceil((m - 1) / ((w - 1) n - 1)), and 1 when the denominator vanishes.
std::size_t predict_worst_pass_bound(std::size_t n, word_t m,
                                     const WordSpec& spec);

/// Total-work target beta * n for uniformly distributed input (rounded up).
std::uint64_t predict_average_work(std::size_t n, double beta,
                                   const WordSpec& spec);

}  // namespace assort
