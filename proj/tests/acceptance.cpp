// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <new>
#include <random>
#include <string>
#include <vector>

#include "assort/errors.hpp"
#include "assort/generators.hpp"
#include "assort/oracle.hpp"
#include "assort/sort.hpp"
#include "assort/verify.hpp"

namespace {

std::atomic<bool> g_counting{false};
std::atomic<std::size_t> g_alloc_calls{0};
std::atomic<std::size_t> g_alloc_bytes{0};

void* counted_alloc(std::size_t size, std::size_t align) {
  if (g_counting.load(std::memory_order_relaxed)) {
    g_alloc_calls.fetch_add(1, std::memory_order_relaxed);
    g_alloc_bytes.fetch_add(size, std::memory_order_relaxed);
  }
  if (size == 0) size = 1;
  void* p = align > alignof(std::max_align_t)
                ? std::aligned_alloc(align, (size + align - 1) / align * align)
                : std::malloc(size);
  if (p == nullptr) throw std::bad_alloc();
  return p;
}

}  // namespace

void* operator new(std::size_t size) { return counted_alloc(size, 0); }
void* operator new[](std::size_t size) { return counted_alloc(size, 0); }
void* operator new(std::size_t size, std::align_val_t a) {
  return counted_alloc(size, static_cast<std::size_t>(a));
}
void* operator new[](std::size_t size, std::align_val_t a) {
  return counted_alloc(size, static_cast<std::size_t>(a));
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete[](void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t) noexcept { std::free(p); }
void operator delete(void* p, std::align_val_t) noexcept { std::free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { std::free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { std::free(p); }

namespace {

using assort::DatasetSpec;
using assort::Error;
using assort::ErrorKind;
using assort::Family;
using assort::word_t;
using assort::WordSpec;
using Words = std::vector<word_t>;

constexpr unsigned kWidths[] = {4, 8, 16, assort::kHostBits};
constexpr Family kFamilies[] = {Family::uniform, Family::adversarial,
                                Family::best_case, Family::full_universe};
constexpr double kBetas[] = {1, 2, 4, 8};

int g_failed = 0;
std::map<int, std::string> g_lines;

void report(int id, const char* name, bool ok, const std::string& detail) {
  g_lines[id] = std::string(ok ? "[PASS] " : "[FAIL] ") + std::to_string(id) + " " + name +
                ": " + detail;
  if (!ok) ++g_failed;
}

// Criterion 5 piggybacks on every sort the other criteria run.
struct Conservation {
  std::size_t snapshots = 0;
  std::size_t stored_checks = 0;
  std::size_t violations = 0;
  std::string first;

  assort::PhaseHook hook(const WordSpec& spec) {
    return [this, spec](const assort::PhaseSnapshot& snap) {
      ++snapshots;
      const auto& t = snap.tally;
      bool ok = t.node_count + t.idle_count + t.deferred_count == snap.region.size();
      if (snap.phase == assort::Phase::stored) {
        ++stored_checks;
        std::size_t bits = 0;
        for (std::size_t r = 0; r < t.node_count; ++r) {
          bits += static_cast<std::size_t>(std::popcount(spec.low_bits(snap.region[r])));
        }
        ok = ok && bits == t.sorted_count();
      }
      if (!ok && violations++ == 0) {
        first = "w=" + std::to_string(spec.bits()) + " pass=" + std::to_string(snap.pass) +
                " phase=" + assort::to_string(snap.phase);
      }
    };
  }
};

Conservation g_conservation;

assort::SortReport checked_sort(Words& values, const WordSpec& spec) {
  assort::SortOptions options;
  options.hook = g_conservation.hook(spec);
  return assort::sort(values, spec, options);
}

std::string describe(const DatasetSpec& d) {
  return "family=" + std::string(assort::to_string(d.family)) + " w=" + std::to_string(d.w) +
         " n=" + std::to_string(d.n) + " beta=" + std::to_string(d.beta) +
         " seed=" + std::to_string(d.seed);
}

DatasetSpec draw_dataset(std::mt19937_64& rng, std::uint64_t seed, std::size_t min_n,
                         std::size_t max_n) {
  DatasetSpec d;
  d.seed = seed;
  std::size_t cap = 0;
  do {
    d.w = kWidths[rng() % std::size(kWidths)];
    d.family = kFamilies[rng() % std::size(kFamilies)];
    d.beta = kBetas[rng() % std::size(kBetas)];
    cap = std::min(max_n, assort::max_feasible_n(d.family, d.w, d.beta));
  } while (cap < min_n);
  d.n = std::uniform_int_distribution<std::size_t>(min_n, cap)(rng);
  return d;
}

void oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  std::size_t mismatches = 0;
  std::size_t full_universe = 0;
  std::string first;
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    const DatasetSpec d = draw_dataset(rng, trial, 0, 4096);
    if (d.family == Family::full_universe) ++full_universe;
    Words values = assort::generate(d);
    const Words expected = assort::oracle_sort(values);
    bool ok = false;
    try {
      checked_sort(values, WordSpec(d.w));
      ok = values == expected;
    } catch (const Error& e) {
      ok = false;
    }
    if (!ok && mismatches++ == 0) first = describe(d);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string detail = "10000 lists, " + std::to_string(full_universe) +
                       " full-universe, mismatches=" + std::to_string(mismatches) +
                       ", " + std::to_string(secs) + " s";
  if (!first.empty()) detail += ", first " + first;
  report(1, "oracle equivalence", mismatches == 0 && secs < 60, detail);
}

void single_pass_regime() {
  std::mt19937_64 rng(77);
  std::size_t bad = 0;
  std::string first;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    DatasetSpec d;
    d.family = Family::best_case;
    d.w = kWidths[rng() % std::size(kWidths)];
    d.seed = trial;
    d.n = std::uniform_int_distribution<std::size_t>(
        1, std::min<std::size_t>(4096, assort::max_feasible_n(d.family, d.w)))(rng);
    Words values = assort::generate(d);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const bool in_regime = *hi - *lo + 1 <= static_cast<word_t>(d.w - 1) * d.n;
    const auto result = checked_sort(values, WordSpec(d.w));
    if ((!in_regime || result.pass_count != 1) && bad++ == 0) {
      first = describe(d) + " passes=" + std::to_string(result.pass_count);
    }
  }
  report(2, "single-pass regime", bad == 0,
         "1000 best-case datasets, violations=" + std::to_string(bad) +
             (first.empty() ? "" : ", first " + first));
}

void worst_case_passes() {
  bool ok = true;
  std::string detail;
  for (const unsigned w : {32u, 64u}) {
    const WordSpec spec(w);
    for (const std::size_t n : {8u, 16u, 64u, 256u}) {
      DatasetSpec d;
      d.family = Family::adversarial;
      d.n = n;
      d.w = w;
      d.seed = n;
      Words values = assort::generate(d);
      const auto result = checked_sort(values, spec);
      const word_t m = static_cast<word_t>(n - 1) * (w - 1) * n + 1;
      const double bound = 2.0 * (static_cast<double>(n) + static_cast<double>(m) / (w - 1));
      const auto scanned = result.work.words_scanned;
      const bool row_ok = result.pass_count == n && static_cast<double>(scanned) <= bound;
      ok = ok && row_ok;
      detail += " w=" + std::to_string(w) + ",n=" + std::to_string(n) +
                ":passes=" + std::to_string(result.pass_count) +
                ",scanned=" + std::to_string(scanned) + "/" +
                std::to_string(static_cast<std::uint64_t>(bound));
    }
  }
  report(3, "worst-case pass count and work", ok, detail.substr(1));
}

void average_case_work() {
  // The criterion is evaluated exactly as stated: n = 2^12 at w = 16.
  constexpr std::size_t kN = 4096;
  constexpr unsigned kW = 16;
  std::size_t runs = 0;
  std::size_t within = 0;
  std::size_t infeasible = 0;
  for (const double beta : {2.0, 4.0, 8.0}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      ++runs;
      DatasetSpec d{Family::uniform, kN, beta, seed, kW};
      try {
        Words values = assort::generate(d);
        const auto result = checked_sort(values, WordSpec(kW));
        if (static_cast<double>(result.work.words_scanned) <= 2 * beta * kN) ++within;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::infeasible_range) throw;
        ++infeasible;
      }
    }
  }
  std::string detail = std::to_string(within) + "/" + std::to_string(runs) +
                       " runs within 2*beta*n, " + std::to_string(infeasible) +
                       " infeasible (beta*n*(w-1) > 2^(w-1))";
  // Same measurement at the host width, where the datasets exist.
  for (const double beta : {2.0, 4.0, 8.0}) {
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      DatasetSpec d{Family::uniform, kN, beta, seed, assort::kHostBits};
      Words values = assort::generate(d);
      const auto result = checked_sort(values, WordSpec());
      worst = std::max(worst, static_cast<double>(result.work.words_scanned) / (beta * kN));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "; w=64 beta=%g max scanned/(beta*n)=%.2f", beta, worst);
    detail += buf;
  }
  report(4, "average-case work", within * 100 >= runs * 95, detail);
}

void counter_conservation() {
  report(5, "counter conservation",
         g_conservation.violations == 0 && g_conservation.stored_checks > 0,
         std::to_string(g_conservation.snapshots) + " phase snapshots, " +
             std::to_string(g_conservation.stored_checks) + " popcount checks, violations=" +
             std::to_string(g_conservation.violations) +
             (g_conservation.first.empty() ? "" : ", first " + g_conservation.first));
}

// Runs one hazard input through the phases with delta = 0 using the given
// expansion mode. Returns true when the output is sorted.
bool hazard_sorts(const Words& input, const WordSpec& spec,
                  assort::detail::ExpansionWrite mode) {
  Words s = input;
  const Words expected = assort::oracle_sort(s);
  try {
    const auto t = assort::practice_pass(s, 0, spec);
    assort::store_records(s, t.node_count, spec);
    assort::partition_idles(s, t.node_count, t.idle_count, 0, spec);
    assort::detail::retrieve_sorted_with(mode, s, t.node_count, t.idle_count, 0, spec);
  } catch (const Error&) {
    return false;
  }
  return s == expected;
}

void clobber_regression() {
  using assort::detail::ExpansionWrite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t control_failures = 0;
  for (const unsigned w : kWidths) {
    const WordSpec spec(w);
    for (const auto& hc : assort::hazard_cases(w)) {
      ++cases;
      if (!hazard_sorts(hc.values, spec, ExpansionWrite::preserve_tag)) ++failures;
      if (!hazard_sorts(hc.values, spec, ExpansionWrite::full_word)) ++control_failures;
    }
    for (const auto& hc : assort::anchored_hazard_cases(w)) {
      ++cases;
      Words s = hc.values;
      const Words expected = assort::oracle_sort(s);
      try {
        checked_sort(s, spec);
        if (s != expected) ++failures;
      } catch (const Error&) {
        ++failures;
      }
      Words c = hc.values;
      try {
        assort::detail::sort_with(ExpansionWrite::full_word, c, spec);
        if (c != expected) ++control_failures;
      } catch (const Error&) {
        ++control_failures;
      }
    }
  }
  const Words reference{35, 42, 43, 44, 45, 46, 47};
  const bool reference_ok = hazard_sorts(reference, WordSpec(8), ExpansionWrite::preserve_tag);
  // Negative control: full-word expansion writes must break the reference case.
  const bool control_caught = !hazard_sorts(reference, WordSpec(8), ExpansionWrite::full_word);
  report(6, "clobber regression",
         failures == 0 && reference_ok && control_caught && control_failures > 0,
         std::to_string(cases) + " hazard inputs, failures=" + std::to_string(failures) +
             ", [35,42..47] " + (reference_ok ? "sorted" : "broken") +
             ", degraded build failures=" + std::to_string(control_failures));
}

void duplicate_rejection() {
  std::mt19937_64 rng(4242);
  std::size_t missed = 0;
  std::string first;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const DatasetSpec d = draw_dataset(rng, trial, 2, 4096);
    Words values = assort::generate(d);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    const std::size_t from = pick(rng);
    std::size_t to = pick(rng);
    if (to == from) to = (from + 1) % values.size();
    values[to] = values[from];
    bool rejected = false;
    try {
      checked_sort(values, WordSpec(d.w));
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::duplicate_detected;
    }
    if (!rejected && missed++ == 0) first = describe(d);
  }
  report(7, "duplicate rejection", missed == 0,
         "1000 near-distinct lists, missed=" + std::to_string(missed) +
             (first.empty() ? "" : ", first " + first));
}

void in_place_contract() {
  std::string detail;
  bool ok = true;
  std::size_t largest = 0;
  const DatasetSpec suite[] = {
      {Family::uniform, std::size_t{1} << 10, 2, 1, 64},
      {Family::uniform, std::size_t{1} << 20, 2, 2, 64},
      {Family::best_case, std::size_t{1} << 20, 1, 3, 64},
      {Family::full_universe, std::size_t{1} << 20, 1, 4, 24},
      {Family::adversarial, 256, 1, 5, 32},
  };
  for (const DatasetSpec& d : suite) {
    Words values = assort::generate(d);
    const Words expected = assort::oracle_sort(values);
    assort::SortOptions options;
    options.record_passes = false;
    g_alloc_calls = 0;
    g_alloc_bytes = 0;
    g_counting = true;
    const auto rep = assort::sort(values, WordSpec(d.w), options);
    g_counting = false;
    const std::size_t bytes = g_alloc_bytes;
    largest = std::max(largest, bytes);
    ok = ok && values == expected && bytes == 0;
    detail += " " + std::string(assort::to_string(d.family)) + " n=" + std::to_string(d.n) +
              ":allocs=" + std::to_string(g_alloc_calls.load()) +
              ",bytes=" + std::to_string(bytes) + ",passes=" + std::to_string(rep.pass_count);
  }
  report(8, "in-place contract", ok, detail.substr(1));
}

}  // namespace

int main() {
  oracle_equivalence();
  single_pass_regime();
  worst_case_passes();
  average_case_work();
  clobber_regression();
  duplicate_rejection();
  in_place_contract();
  counter_conservation();
  for (const auto& [id, line] : g_lines) std::printf("%s\n", line.c_str());
  std::printf("%d of 8 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
