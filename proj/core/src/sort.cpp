#include "assort/sort.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>
#include <utility>

#include "assort/errors.hpp"

namespace assort {
namespace {

using detail::ExpansionWrite;

void swap_low_bits(word_t& a, word_t& b, const WordSpec& spec) noexcept {
  const word_t tag = spec.tag_mask();
  const word_t low = spec.value_mask();
  const word_t a_word = a;
  a = (a_word & tag) | (b & low);
  b = (b & tag) | (a_word & low);
}

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(ErrorKind::corrupt_state, "retrieval: " + what);
}

// Each phase below returns the final position of its scan cursor.

std::size_t practice(std::span<word_t> s, word_t delta, const WordSpec& spec,
                     PassTally& tally, WorkCounters& work) {
  const std::size_t n = s.size();
  tally = PassTally{};
  tally.region_length = n;
  tally.delta = delta;

  std::size_t i = 0;
  while (i < n) {
    ++work.words_scanned;
    const word_t value = s[i];
    if (spec.has_tag(value)) {
      ++i;
      continue;
    }
    // Earlier passes only ever leave values >= the next minimum behind.
    assert(value >= delta);

    const auto slot = compute_hash(value, delta, n, spec);
    if (!slot) {
      ++tally.deferred_count;
      tally.deferred_min = std::min(tally.deferred_min.value_or(value), value);
      ++i;
      continue;
    }

    const word_t bit = word_t{1} << slot->bit;
    word_t& node = s[slot->node];
    if (!spec.has_tag(node)) {
      // First value of this node: the displaced word moves into slot i.
      s[i] = node;
      node = spec.tag_mask() | bit;
      work.words_written += slot->node == i ? 1 : 2;
      ++tally.node_count;
      if (slot->node <= i) {
        ++i;
      }
    } else {
      if ((node & bit) != 0) {
        throw Error(ErrorKind::duplicate_detected,
                    "value " + std::to_string(value) + " occurs more than once");
      }
      node |= bit;
      ++work.words_written;
      ++tally.idle_count;
      ++i;
    }
  }
  return i;
}

std::size_t store(std::span<word_t> s, std::size_t node_count,
                  const WordSpec& spec, WorkCounters& work) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t remaining = node_count;
  while (remaining > 0) {
    if (i == s.size()) {
      throw Error(ErrorKind::corrupt_state,
                  "store: fewer tagged words than the node count");
    }
    ++work.words_scanned;
    if (spec.has_tag(s[i])) {
      if (i != j) {
        swap_low_bits(s[i], s[j], spec);
        work.words_written += 2;
      }
      ++j;
      --remaining;
    }
    ++i;
  }
  return i;
}

std::size_t partition(std::span<word_t> s, std::size_t node_count,
                      std::size_t idle_count, word_t delta,
                      const WordSpec& spec, WorkCounters& work) {
  const std::size_t n = s.size();
  std::size_t i = node_count;
  std::size_t j = node_count;
  std::size_t remaining = idle_count;
  while (remaining > 0) {
    if (i == n) {
      throw Error(ErrorKind::corrupt_state,
                  "partition: fewer idle values than the idle count");
    }
    ++work.words_scanned;
    if (compute_hash(spec.low_bits(s[i]), delta, n, spec)) {
      if (i != j) {
        swap_low_bits(s[i], s[j], spec);
        work.words_written += 2;
      }
      ++j;
      --remaining;
    }
    ++i;
  }
  return i;
}

template <ExpansionWrite Mode>
std::size_t retrieve(std::span<word_t> s, std::size_t node_count,
                     std::size_t idle_count, word_t delta,
                     const WordSpec& spec, WorkCounters& work) {
  const word_t tag = spec.tag_mask();
  std::size_t i = s.size();     // scan cursor, one past the next word to read
  std::size_t r = node_count;   // records left, next one at r - 1
  std::size_t p = node_count + idle_count;  // output cursor, one past
  if (p > s.size()) {
    corrupt("n_d + n_c exceeds the region length");
  }

  while (p > 0) {
    if (i == 0) {
      corrupt("scan ran off the region with " + std::to_string(p) +
              " values still to emit");
    }
    --i;
    ++work.words_scanned;
    if ((s[i] & tag) == 0) {
      continue;
    }
    if (r == 0) {
      corrupt("tag at index " + std::to_string(i) + " has no record");
    }
    --r;
    // The expansion below may overwrite s[r] itself.
    word_t record = spec.low_bits(s[r]);
    const word_t base = node_base(i, delta, spec);
    while (record != 0) {
      const auto k = static_cast<unsigned>(std::bit_width(record) - 1);
      record &= ~(word_t{1} << k);
      if (p == 0) {
        corrupt("record at index " + std::to_string(r) +
                " decodes more values than the region holds");
      }
      --p;
      if constexpr (Mode == ExpansionWrite::preserve_tag) {
        s[p] = (s[p] & tag) | (base + k);
      } else {
        s[p] = base + k;
      }
      ++work.words_written;
    }
    s[i] &= ~tag;
    ++work.words_written;
  }
  if (r != 0) {
    corrupt(std::to_string(r) + " records left unconsumed");
  }
  return i;
}

std::size_t retrieve(ExpansionWrite mode, std::span<word_t> s,
                     std::size_t node_count, std::size_t idle_count,
                     word_t delta, const WordSpec& spec, WorkCounters& work) {
  return mode == ExpansionWrite::preserve_tag
             ? retrieve<ExpansionWrite::preserve_tag>(s, node_count, idle_count,
                                                      delta, spec, work)
             : retrieve<ExpansionWrite::full_word>(s, node_count, idle_count,
                                                   delta, spec, work);
}

// Minimum scan that also rejects words already carrying a tag bit.
word_t checked_min(std::span<const word_t> region, const WordSpec& spec,
                   WorkCounters& work) {
  word_t lowest = region.front();
  for (std::size_t i = 0; i < region.size(); ++i) {
    const word_t value = region[i];
    if (spec.has_tag(value)) {
      throw Error(ErrorKind::value_exceeds_universe,
                  "value " + std::to_string(value) + " at index " +
                      std::to_string(i) + " has the tag bit set");
    }
    lowest = std::min(lowest, value);
  }
  work.words_scanned += region.size();
  return lowest;
}

struct Driver {
  const WordSpec& spec;
  const SortOptions& options;
  ExpansionWrite mode;
  SortReport& report;

  void emit(Phase phase, std::size_t pass, std::size_t offset, bool upper,
            std::span<const word_t> region, const PassTally& tally,
            std::size_t cursor) const {
    if (options.hook) {
      options.hook(
          PhaseSnapshot{phase, pass, offset, upper, region, tally, cursor});
    }
  }

  void record(const PassTally& tally) const {
    if (options.record_passes) {
      report.passes.push_back(tally);
    }
    ++report.pass_count;
  }

  void run(std::span<word_t> region, std::size_t offset, bool upper) const {
    if (region.empty()) {
      return;
    }
    WorkCounters& work = report.work;
    word_t delta = checked_min(region, spec, work);
    std::size_t start = 0;
    std::size_t pass = 0;

    while (start < region.size()) {
      const std::span<word_t> sub = region.subspan(start);
      const std::size_t sub_offset = offset + start;

      if (sub.size() == 1) {
        PassTally tally;
        tally.region_length = 1;
        tally.delta = sub[0];
        tally.node_count = 1;
        record(tally);
        emit(Phase::singleton, pass, sub_offset, upper, sub, tally, 0);
        return;
      }

      PassTally tally;
      std::size_t cursor = practice(sub, delta, spec, tally, work);
      emit(Phase::practiced, pass, sub_offset, upper, sub, tally, cursor);

      cursor = store(sub, tally.node_count, spec, work);
      emit(Phase::stored, pass, sub_offset, upper, sub, tally, cursor);

      cursor = partition(sub, tally.node_count, tally.idle_count, delta, spec,
                         work);
      emit(Phase::partitioned, pass, sub_offset, upper, sub, tally, cursor);

      cursor = retrieve(mode, sub, tally.node_count, tally.idle_count, delta,
                        spec, work);
      emit(Phase::retrieved, pass, sub_offset, upper, sub, tally, cursor);

      record(tally);
      start += tally.sorted_count();
      ++pass;
      if (!tally.deferred_min) {
        assert(start == region.size());
        return;
      }
      delta = *tally.deferred_min;
    }
  }
};

SortReport sort_impl(ExpansionWrite mode, std::span<word_t> values,
                     const WordSpec& spec, const SortOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SortReport report;
  const Driver driver{spec, options, mode, report};

  const word_t half = spec.tag_mask();
  const word_t top = spec.universe_max();
  bool any_high = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > top) {
      throw Error(ErrorKind::value_exceeds_universe,
                  "value " + std::to_string(values[i]) + " at index " +
                      std::to_string(i) + " does not fit in " +
                      std::to_string(spec.bits()) + " bits");
    }
    any_high = any_high || values[i] >= half;
  }
  report.work.words_scanned += values.size();

  if (!any_high) {
    driver.run(values, 0, false);
  } else {
    // In-place Hoare partition around 2^(w-1); order within sides is free.
    std::size_t lo = 0;
    std::size_t hi = values.size();
    for (;;) {
      while (lo < hi && values[lo] < half) {
        ++lo;
      }
      while (lo < hi && values[hi - 1] >= half) {
        --hi;
      }
      if (lo >= hi) {
        break;
      }
      std::swap(values[lo], values[hi - 1]);
      report.work.words_written += 2;
      ++lo;
      --hi;
    }
    report.work.words_scanned += values.size();

    const std::span<word_t> upper = values.subspan(lo);
    for (word_t& v : upper) {
      v -= half;
    }
    driver.run(values.first(lo), 0, false);
    driver.run(upper, lo, true);
    for (word_t& v : upper) {
      v += half;
    }
    report.work.words_written += 2 * upper.size();
    report.work.words_scanned += 2 * upper.size();
  }

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace

const char* to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::practiced: return "practice";
    case Phase::stored: return "store";
    case Phase::partitioned: return "partition";
    case Phase::retrieved: return "retrieve";
    case Phase::singleton: return "singleton";
  }
  return "unknown";
}

word_t find_min(std::span<const word_t> region, WorkCounters* work) {
  if (region.empty()) {
    throw Error(ErrorKind::empty_region, "minimum of an empty region");
  }
  if (work != nullptr) {
    work->words_scanned += region.size();
  }
  return *std::min_element(region.begin(), region.end());
}

PassTally practice_pass(std::span<word_t> region, word_t delta,
                        const WordSpec& spec, WorkCounters* work) {
  WorkCounters local;
  PassTally tally;
  practice(region, delta, spec, tally, work != nullptr ? *work : local);
  return tally;
}

void store_records(std::span<word_t> region, std::size_t node_count,
                   const WordSpec& spec, WorkCounters* work) {
  WorkCounters local;
  store(region, node_count, spec, work != nullptr ? *work : local);
}

void partition_idles(std::span<word_t> region, std::size_t node_count,
                     std::size_t idle_count, word_t delta,
                     const WordSpec& spec, WorkCounters* work) {
  WorkCounters local;
  partition(region, node_count, idle_count, delta, spec,
            work != nullptr ? *work : local);
}

void retrieve_sorted(std::span<word_t> region, std::size_t node_count,
                     std::size_t idle_count, word_t delta,
                     const WordSpec& spec, WorkCounters* work) {
  WorkCounters local;
  retrieve<ExpansionWrite::preserve_tag>(region, node_count, idle_count, delta,
                                         spec, work != nullptr ? *work : local);
}

SortReport sort_region(std::span<word_t> region, const WordSpec& spec,
                       const SortOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SortReport report;
  Driver{spec, options, ExpansionWrite::preserve_tag, report}.run(region, 0,
                                                                  false);
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

SortReport sort(std::span<word_t> values, const WordSpec& spec,
                const SortOptions& options) {
  return sort_impl(ExpansionWrite::preserve_tag, values, spec, options);
}

namespace detail {

void retrieve_sorted_with(ExpansionWrite mode, std::span<word_t> region,
                          std::size_t node_count, std::size_t idle_count,
                          word_t delta, const WordSpec& spec,
                          WorkCounters* work) {
  WorkCounters local;
  retrieve(mode, region, node_count, idle_count, delta, spec,
           work != nullptr ? *work : local);
}

SortReport sort_with(ExpansionWrite mode, std::span<word_t> values,
                     const WordSpec& spec, const SortOptions& options) {
  return sort_impl(mode, values, spec, options);
}

}  // namespace detail

}  // namespace assort
