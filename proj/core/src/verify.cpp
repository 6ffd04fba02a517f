#include "assort/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "assort/errors.hpp"
#include "assort/oracle.hpp"
#include "assort/sort.hpp"

namespace assort {
namespace {

constexpr std::size_t kSizeMax = std::numeric_limits<std::size_t>::max();

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t trial) {
  // splitmix64 finaliser
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Trial {
  DatasetSpec dataset;
  std::string describe() const {
    std::ostringstream os;
    os << "family=" << to_string(dataset.family) << " w=" << dataset.w
       << " n=" << dataset.n << " beta=" << dataset.beta
       << " seed=" << dataset.seed;
    return os.str();
  }
};

constexpr Family kFamilies[] = {Family::uniform, Family::adversarial,
                                Family::best_case, Family::full_universe};
constexpr double kBetas[] = {1.0, 2.0, 4.0, 8.0};

// Half the trials stay small so that every width sees many short lists.
std::size_t pick_n(std::mt19937_64& rng, std::size_t cap) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    return std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(cap, 64))(rng);
  }
  return std::uniform_int_distribution<std::size_t>(0, cap)(rng);
}

Trial random_trial(std::uint64_t seed, const VerifyOptions& options,
                   std::span<const Family> families, std::size_t min_n = 0) {
  std::mt19937_64 rng(seed);
  Trial t;
  t.dataset.seed = seed;
  std::size_t cap = 0;
  // Small widths cannot host every family at every beta; redraw until the
  // combination admits min_n values.
  do {
    t.dataset.w = options.widths[std::uniform_int_distribution<std::size_t>(
        0, options.widths.size() - 1)(rng)];
    t.dataset.family = families[std::uniform_int_distribution<std::size_t>(
        0, families.size() - 1)(rng)];
    t.dataset.beta = kBetas[std::uniform_int_distribution<int>(0, 3)(rng)];
    cap = std::min(options.max_n,
                   max_feasible_n(t.dataset.family, t.dataset.w, t.dataset.beta));
  } while (cap < min_n);
  t.dataset.n = std::max(min_n, pick_n(rng, cap));
  return t;
}

class Recorder {
 public:
  explicit Recorder(std::string name) { outcome_.name = std::move(name); }

  void check(bool ok, const std::string& context) {
    ++outcome_.checks;
    if (!ok) {
      if (outcome_.failures == 0) {
        outcome_.first_failure = context;
      }
      ++outcome_.failures;
    }
  }

  SuiteOutcome take() { return std::move(outcome_); }

 private:
  SuiteOutcome outcome_;
};

// Hook that checks counter conservation and record popcounts at every phase
// boundary. Any violation is remembered in `violation`.
PhaseHook conservation_hook(const WordSpec& spec, std::string& violation) {
  return [&spec, &violation](const PhaseSnapshot& snap) {
    if (!violation.empty()) {
      return;
    }
    const PassTally& t = snap.tally;
    if (t.node_count + t.idle_count + t.deferred_count != snap.region.size()) {
      violation = "n_d + n_c + n_d' != region length in pass " +
                  std::to_string(snap.pass);
    }
    if (snap.phase == Phase::stored) {
      std::size_t bits = 0;
      for (std::size_t r = 0; r < t.node_count; ++r) {
        bits += static_cast<std::size_t>(std::popcount(spec.low_bits(snap.region[r])));
      }
      if (bits != t.sorted_count()) {
        violation = "record popcount != n_d + n_c in pass " +
                    std::to_string(snap.pass);
      }
    }
  };
}

SuiteOutcome oracle_suite(const VerifyOptions& options) {
  Recorder rec("oracle-equivalence");
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const Trial t = random_trial(mix_seed(options.seed, trial), options, kFamilies);
    const WordSpec spec(t.dataset.w);
    std::vector<word_t> values = generate(t.dataset);
    const std::vector<word_t> expected = oracle_sort(values);
    std::string violation;
    SortOptions sort_options;
    sort_options.hook = conservation_hook(spec, violation);
    try {
      sort(values, spec, sort_options);
      rec.check(values == expected && violation.empty(),
                t.describe() + (violation.empty() ? "" : " " + violation));
    } catch (const Error& e) {
      rec.check(false, t.describe() + " threw " + e.what());
    }
  }
  return rec.take();
}

SuiteOutcome pass_count_suite(const VerifyOptions& options) {
  Recorder rec("pass-counts");
  constexpr Family kPassFamilies[] = {Family::best_case, Family::adversarial};
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const Trial t = random_trial(mix_seed(options.seed ^ 0x7a55, trial),
                                 options, kPassFamilies, 1);
    const WordSpec spec(t.dataset.w);
    std::vector<word_t> values = generate(t.dataset);
    SortOptions sort_options;
    sort_options.record_passes = false;
    const SortReport report = sort(values, spec, sort_options);
    const std::size_t want =
        t.dataset.family == Family::best_case ? 1 : t.dataset.n;
    rec.check(report.pass_count == want,
              t.describe() + " passes=" + std::to_string(report.pass_count) +
                  " expected=" + std::to_string(want));
  }
  return rec.take();
}

SuiteOutcome tally_suite(const VerifyOptions& options) {
  Recorder rec("tally-oracle");
  constexpr Family kUntagged[] = {Family::uniform, Family::adversarial,
                                  Family::best_case};
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const Trial t = random_trial(mix_seed(options.seed ^ 0x7a11, trial),
                                 options, kUntagged, 1);
    const WordSpec spec(t.dataset.w);
    std::vector<word_t> values = generate(t.dataset);
    const word_t delta = find_min(values);
    const PassTally want = verify_pass_tally(values, delta, values.size(), spec);
    const PassTally got = practice_pass(values, delta, spec);
    rec.check(got == want, t.describe());
  }
  return rec.take();
}

SuiteOutcome clobber_suite(const VerifyOptions& options) {
  Recorder rec("clobber-regression");
  for (const unsigned w : options.widths) {
    const WordSpec spec(w);
    for (const HazardCase& hc : hazard_cases(w)) {
      std::vector<word_t> s = hc.values;
      const auto expected = oracle_sort(s);
      std::string context = "w=" + std::to_string(w) + " values=[";
      for (const word_t v : hc.values) context += std::to_string(v) + " ";
      context += "]";
      try {
        const PassTally t = practice_pass(s, 0, spec);
        store_records(s, t.node_count, spec);
        partition_idles(s, t.node_count, t.idle_count, 0, spec);
        retrieve_sorted(s, t.node_count, t.idle_count, 0, spec);
        rec.check(s == expected, context);
      } catch (const Error& e) {
        rec.check(false, context + " threw " + e.what());
      }
    }
    for (const HazardCase& hc : anchored_hazard_cases(w)) {
      std::vector<word_t> s = hc.values;
      const auto expected = oracle_sort(s);
      try {
        sort(s, spec);
        rec.check(s == expected, "anchored w=" + std::to_string(w));
      } catch (const Error& e) {
        rec.check(false, "anchored w=" + std::to_string(w) + " threw " + e.what());
      }
    }
  }
  return rec.take();
}

SuiteOutcome duplicate_suite(const VerifyOptions& options) {
  Recorder rec("duplicate-rejection");
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = mix_seed(options.seed ^ 0xd0b1e, trial);
    const Trial t = random_trial(seed, options, kFamilies, 2);
    const WordSpec spec(t.dataset.w);
    std::vector<word_t> values = generate(t.dataset);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
    const std::size_t from = pick(rng);
    std::size_t to = pick(rng);
    if (to == from) {
      to = (from + 1) % values.size();
    }
    values[to] = values[from];
    bool rejected = false;
    try {
      sort(values, spec);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::duplicate_detected;
    }
    rec.check(rejected, t.describe());
  }
  return rec.take();
}

}  // namespace

std::size_t max_feasible_n(Family family, unsigned w, double beta) {
  const WordSpec spec(w);
  switch (family) {
    case Family::uniform: {
      const long double n = std::floor(static_cast<long double>(spec.tag_mask()) /
                                       (static_cast<long double>(beta) * spec.record_bits()));
      return n >= static_cast<long double>(kSizeMax) ? kSizeMax
                                                     : static_cast<std::size_t>(n);
    }
    case Family::adversarial: {
      // Largest n with (n - 1)(w - 1)n < 2^(w-1).
      std::size_t lo = 1;
      std::size_t hi = std::size_t{1} << 32;
      auto fits = [&](std::size_t n) {
        const word_t step = static_cast<word_t>(spec.record_bits()) * n;
        return n == 1 || static_cast<word_t>(n - 1) <= (spec.tag_mask() - 1) / step;
      };
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (fits(mid)) lo = mid; else hi = mid - 1;
      }
      return lo;
    }
    case Family::best_case:
      return spec.tag_mask() >= kSizeMax ? kSizeMax
                                         : static_cast<std::size_t>(spec.tag_mask());
    case Family::full_universe:
      return spec.bits() >= kHostBits ? kSizeMax
                                      : static_cast<std::size_t>(spec.universe_max()) + 1;
  }
  return 0;
}

std::vector<HazardCase> hazard_cases(unsigned w) {
  const word_t width = w - 1;
  std::vector<HazardCase> out;
  for (word_t c = 2; c <= width; ++c) {
    for (word_t big = 2; big <= c; ++big) {
      for (word_t small = 1; small < big; ++small) {
        HazardCase hc{w, {small * width}};
        for (word_t k = 0; k < c; ++k) hc.values.push_back(big * width + k);
        if (hc.values.back() < WordSpec(w).tag_mask()) {
          out.push_back(std::move(hc));
        }
      }
    }
  }
  return out;
}

std::vector<HazardCase> anchored_hazard_cases(unsigned w) {
  const word_t width = w - 1;
  std::vector<HazardCase> out;
  for (word_t c = 2; c <= width; ++c) {
    for (word_t big = 3; big <= c + 1; ++big) {
      for (word_t small = 2; small < big; ++small) {
        HazardCase hc{w, {0, small * width}};
        for (word_t k = 0; k < c; ++k) hc.values.push_back(big * width + k);
        if (hc.values.back() < WordSpec(w).tag_mask()) {
          out.push_back(std::move(hc));
        }
      }
    }
  }
  return out;
}

bool VerifySummary::passed() const noexcept { return failures() == 0; }

std::size_t VerifySummary::checks() const noexcept {
  std::size_t total = 0;
  for (const auto& s : suites) total += s.checks;
  return total;
}

std::size_t VerifySummary::failures() const noexcept {
  std::size_t total = 0;
  for (const auto& s : suites) total += s.failures;
  return total;
}

VerifySummary run_verification(const VerifyOptions& options) {
  VerifySummary summary;
  if (options.trials == 0 || options.widths.empty()) {
    return summary;
  }
  summary.suites.push_back(oracle_suite(options));
  summary.suites.push_back(pass_count_suite(options));
  summary.suites.push_back(tally_suite(options));
  summary.suites.push_back(clobber_suite(options));
  summary.suites.push_back(duplicate_suite(options));
  return summary;
}

}  // namespace assort
