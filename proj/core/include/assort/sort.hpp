#pragma once

// In-place associative sort for distinct unsigned integers.
//
// One pass over a region S[0..n) with minimum delta runs four phases:
//
//   practice   every value v with (v - delta) div (w-1) < n sets bit
//              (v - delta) mod (w-1) of node (v - delta) div (w-1); the node
//              word is tagged with the MSB. Other values are deferred.
//   store      the low w-1 bits of the tagged words (records) are compacted
//              to S[0..n_d) in order; tags stay where they are.
//   partition  idle in-range values are moved to S[n_d..n_d+n_c).
//   retrieve   tags are scanned right to left, each paired with the next
//              record from the right, and decoded values are expanded
//              backwards into S[0..n_d+n_c).
//
// The driver then repeats on the deferred suffix using its minimum, which the
// practice phase tracks. Auxiliary state is a handful of words regardless of n.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "assort/hash.hpp"
#include "assort/word_spec.hpp"

namespace assort {

/// Counters produced by one pass.
struct PassTally {
  std::size_t region_length = 0;
  word_t delta = 0;
  std::size_t node_count = 0;      // n_d
  std::size_t idle_count = 0;      // n_c
  std::size_t deferred_count = 0;  // n_d'
  /// Minimum of the deferred values; empty when deferred_count == 0.
  std::optional<word_t> deferred_min;

  constexpr std::size_t sorted_count() const noexcept {
    return node_count + idle_count;
  }

  friend bool operator==(const PassTally&, const PassTally&) = default;
};

/// Work instrumentation. `words_scanned` counts cursor visits in every phase
/// (one per loop iteration that inspects a word); `words_written` counts
/// word mutations.
struct WorkCounters {
  std::uint64_t words_scanned = 0;
  std::uint64_t words_written = 0;

  WorkCounters& operator+=(const WorkCounters& other) noexcept {
    words_scanned += other.words_scanned;
    words_written += other.words_written;
    return *this;
  }
};

struct SortReport {
  /// Per-pass log, in execution order. Left empty when the caller disables
  /// pass recording; `pass_count` is maintained either way.
  std::vector<PassTally> passes;
  std::size_t pass_count = 0;
  WorkCounters work;
  std::chrono::nanoseconds elapsed{0};
};

enum class Phase { practiced, stored, partitioned, retrieved, singleton };

const char* to_string(Phase phase) noexcept;

/// State handed to the tracing hook at each phase boundary.
struct PhaseSnapshot {
  Phase phase;
  std::size_t pass;             // zero-based within the enclosing sort call
  std::size_t offset;           // index of region[0] in the caller's list
  bool upper_half;              // region holds values shifted down by 2^(w-1)
  std::span<const word_t> region;
  const PassTally& tally;
  /// Final position of the phase's scan cursor.
  std::size_t cursor;
};

using PhaseHook = std::function<void(const PhaseSnapshot&)>;

struct SortOptions {
  PhaseHook hook;
  bool record_passes = true;
};

/// Minimum of a non-empty region. Throws Error{empty_region}.
word_t find_min(std::span<const word_t> region, WorkCounters* work = nullptr);

/// Practice phase. Requires every value in [delta, 2^(w-1)) and pairwise
/// distinct; throws Error{duplicate_detected} when a record bit is already
/// set, leaving the region in an unspecified state.
PassTally practice_pass(std::span<word_t> region, word_t delta,
                        const WordSpec& spec, WorkCounters* work = nullptr);

/// Store phase: compacts the low bits of the `node_count` tagged words into
/// region[0..node_count) in order, leaving every tag bit in place.
void store_records(std::span<word_t> region, std::size_t node_count,
                   const WordSpec& spec, WorkCounters* work = nullptr);

/// Partition phase: clusters the `idle_count` in-range values right after the
/// records. Only low bits move.
void partition_idles(std::span<word_t> region, std::size_t node_count,
                     std::size_t idle_count, word_t delta,
                     const WordSpec& spec, WorkCounters* work = nullptr);

/// Retrieve phase: region[0..node_count+idle_count) becomes the ascending
/// practiced values, deferred values remain behind them and no tag survives.
/// Throws Error{corrupt_state} when tags and records do not correspond.
void retrieve_sorted(std::span<word_t> region, std::size_t node_count,
                     std::size_t idle_count, word_t delta,
                     const WordSpec& spec, WorkCounters* work = nullptr);

/// Sequential driver over a region whose values are all below 2^(w-1).
/// Throws Error{value_exceeds_universe} if a tag bit is already set and
/// Error{duplicate_detected} on repeated values.
SortReport sort_region(std::span<word_t> region, const WordSpec& spec,
                       const SortOptions& options = {});

/// Sorts any distinct values below 2^w. Values with the top bit set are
/// partitioned to the back, shifted down, sorted separately and shifted back.
SortReport sort(std::span<word_t> values, const WordSpec& spec,
                const SortOptions& options = {});

namespace detail {

/// How retrieval writes an expanded value. `full_word` overwrites the whole
/// destination word, which destroys unscanned tags it lands on; it exists
/// only so tests can demonstrate that hazard.
enum class ExpansionWrite { preserve_tag, full_word };

void retrieve_sorted_with(ExpansionWrite mode, std::span<word_t> region,
                          std::size_t node_count, std::size_t idle_count,
                          word_t delta, const WordSpec& spec,
                          WorkCounters* work = nullptr);

SortReport sort_with(ExpansionWrite mode, std::span<word_t> values,
                     const WordSpec& spec, const SortOptions& options = {});

}  // namespace detail

}  // namespace assort
