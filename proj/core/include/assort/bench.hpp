#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "assort/generators.hpp"

namespace assort {

enum class Algorithm { assoc, oracle_comparison, counting_baseline };

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// One CSV row.
struct BenchRecord {
  Algorithm algorithm = Algorithm::assoc;
  Family family = Family::uniform;
  std::size_t n = 0;
  word_t m = 0;  // max - min + 1 of the generated data, 0 when empty
  unsigned w = kHostBits;
  std::size_t passes = 0;  // 0 for baselines
  std::uint64_t words_scanned = 0;
  std::uint64_t nanos = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct SuiteOptions {
  std::size_t repetitions = 1;
  /// counting_baseline is skipped (no record) when m exceeds this.
  word_t counting_cap = word_t{1} << 26;
  /// Datasets are spread over this many threads; repetitions of one dataset
  /// always stay on one thread.
  unsigned workers = 1;
};

/// Generates each dataset, times every algorithm on a fresh copy and checks
/// the result against oracle_sort. Records come back ordered by dataset,
/// then algorithm, then repetition. Throws Error{verification_failed} naming
/// the seed of the first bad run.
std::vector<BenchRecord> run_suite(std::span<const DatasetSpec> suite,
                                   std::span<const Algorithm> algorithms,
                                   const SuiteOptions& options = {});

inline constexpr std::string_view kCsvHeader =
    "algorithm,family,n,m,w,passes,words_scanned,nanos,seed";

void emit_csv(std::span<const BenchRecord> records, std::ostream& out);

/// Reads back what emit_csv wrote. Throws Error{parse_error}.
std::vector<BenchRecord> parse_csv(std::istream& in);

}  // namespace assort
