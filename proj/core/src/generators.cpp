#include "assort/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "assort/errors.hpp"

namespace assort {
namespace {

using Rng = std::mt19937_64;

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorKind::infeasible_range, what);
}

// n distinct values from [lo, hi]. Dense ranges use a partial Fisher-Yates
// shuffle; sparse ones use rejection against a seen-set.
std::vector<word_t> sample_distinct(Rng& rng, word_t lo, word_t hi,
                                    std::size_t n) {
  const word_t span = hi - lo;  // size - 1, never overflows
  if (span < n - 1 && n > 0) {
    infeasible("cannot draw " + std::to_string(n) + " distinct values from [" +
               std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  std::vector<word_t> out;
  out.reserve(n);
  constexpr word_t kDenseLimit = word_t{1} << 16;
  if (span < std::max<word_t>(4 * static_cast<word_t>(n), kDenseLimit)) {
    std::vector<word_t> pool(static_cast<std::size_t>(span) + 1);
    std::iota(pool.begin(), pool.end(), lo);
    for (std::size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
      out.push_back(pool[i]);
    }
    return out;
  }
  std::unordered_set<word_t> seen;
  seen.reserve(n);
  std::uniform_int_distribution<word_t> draw(lo, hi);
  while (out.size() < n) {
    const word_t v = draw(rng);
    if (seen.insert(v).second) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::uniform: return "uniform";
    case Family::adversarial: return "adversarial";
    case Family::best_case: return "best_case";
    case Family::full_universe: return "full_universe";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const Family f : {Family::uniform, Family::adversarial,
                         Family::best_case, Family::full_universe}) {
    if (to_string(f) == name) {
      return f;
    }
  }
  return std::nullopt;
}

std::vector<word_t> gen_uniform(const DatasetSpec& spec) {
  const WordSpec word(spec.w);
  if (spec.n == 0) {
    return {};
  }
  if (!(spec.beta >= 1.0)) {
    infeasible("beta must be >= 1");
  }
  const long double range = std::floor(static_cast<long double>(spec.beta) *
                                       static_cast<long double>(spec.n) *
                                       word.record_bits());
  if (range > static_cast<long double>(word.tag_mask())) {
    infeasible("uniform range beta*n*(w-1) exceeds 2^(w-1) for w=" +
               std::to_string(spec.w));
  }
  Rng rng(spec.seed);
  return sample_distinct(rng, 0, static_cast<word_t>(range) - 1, spec.n);
}

std::vector<word_t> gen_adversarial(std::size_t n, const WordSpec& spec) {
  if (n == 0) {
    return {};
  }
  const word_t step = static_cast<word_t>(spec.record_bits()) * n;
  if (n > 1 && static_cast<word_t>(n - 1) > (spec.tag_mask() - 1) / step) {
    infeasible("adversarial spread (n-1)(w-1)n does not fit below 2^(w-1) for n=" +
               std::to_string(n) + ", w=" + std::to_string(spec.bits()));
  }
  std::vector<word_t> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = static_cast<word_t>(t) * step;
  }
  return out;
}

std::vector<word_t> gen_best_case(std::size_t n, const WordSpec& spec,
                                  word_t delta, std::uint64_t seed) {
  if (n == 0) {
    return {};
  }
  const word_t limit = spec.value_mask();
  if (delta > limit) {
    infeasible("best-case minimum does not fit below 2^(w-1)");
  }
  // Highest admissible value: delta + (w-1)n - 1, clipped to the universe.
  const word_t width = static_cast<word_t>(spec.record_bits()) * n - 1;
  const word_t hi = width > limit - delta ? limit : delta + width;
  std::vector<word_t> out{delta};
  if (n > 1) {
    if (hi == delta) {
      infeasible("best-case interval holds a single value");
    }
    Rng rng(seed);
    auto rest = sample_distinct(rng, delta + 1, hi, n - 1);
    out.insert(out.end(), rest.begin(), rest.end());
    std::shuffle(out.begin(), out.end(), rng);
  }
  return out;
}

std::vector<word_t> gen_full_universe(std::size_t n, const WordSpec& spec,
                                      std::uint64_t seed) {
  if (n == 0) {
    return {};
  }
  Rng rng(seed);
  return sample_distinct(rng, 0, spec.universe_max(), n);
}

std::vector<word_t> generate(const DatasetSpec& spec) {
  const WordSpec word(spec.w);
  switch (spec.family) {
    case Family::uniform:
      return gen_uniform(spec);
    case Family::adversarial: {
      auto out = gen_adversarial(spec.n, word);
      Rng rng(spec.seed);
      std::shuffle(out.begin(), out.end(), rng);
      return out;
    }
    case Family::best_case: {
      if (spec.n == 0) {
        return {};
      }
      // Leave room for the whole (w-1)n interval when the universe allows.
      const word_t width = static_cast<word_t>(word.record_bits()) * spec.n;
      const word_t room =
          width > word.value_mask() ? 0 : word.value_mask() - width + 1;
      Rng rng(spec.seed);
      const word_t delta =
          std::uniform_int_distribution<word_t>(0, room)(rng);
      return gen_best_case(spec.n, word, delta, spec.seed ^ kBestCaseSeed);
    }
    case Family::full_universe:
      return gen_full_universe(spec.n, word, spec.seed);
  }
  return {};
}

}  // namespace assort
