#include "assort/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <istream>
#include <ostream>
#include <string>
#include <thread>

#include "assort/errors.hpp"
#include "assort/oracle.hpp"
#include "assort/sort.hpp"

namespace assort {
namespace {

struct RunResult {
  std::size_t passes = 0;
  std::uint64_t words_scanned = 0;
  std::chrono::nanoseconds elapsed{0};
};

RunResult run_counting(std::vector<word_t>& values) {
  RunResult result;
  if (values.empty()) {
    return result;
  }
  const auto started = std::chrono::steady_clock::now();
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const word_t lo = *lo_it;
  const auto range = static_cast<std::size_t>(*hi_it - lo) + 1;
  std::vector<std::uint32_t> counts(range, 0);
  for (const word_t v : values) {
    ++counts[static_cast<std::size_t>(v - lo)];
  }
  std::size_t out = 0;
  for (std::size_t k = 0; k < range; ++k) {
    for (std::uint32_t c = counts[k]; c > 0; --c) {
      values[out++] = lo + k;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - started;
  result.words_scanned = 2 * values.size() + range;
  return result;
}

RunResult run_one(Algorithm algorithm, std::vector<word_t>& values,
                  const WordSpec& spec) {
  switch (algorithm) {
    case Algorithm::assoc: {
      SortOptions options;
      options.record_passes = false;
      const SortReport report = sort(values, spec, options);
      return {report.pass_count, report.work.words_scanned, report.elapsed};
    }
    case Algorithm::oracle_comparison: {
      const auto started = std::chrono::steady_clock::now();
      std::sort(values.begin(), values.end());
      return {0, 0, std::chrono::steady_clock::now() - started};
    }
    case Algorithm::counting_baseline:
      return run_counting(values);
  }
  return {};
}

word_t value_range(std::span<const word_t> values) {
  if (values.empty()) {
    return 0;
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo + 1;
}

std::vector<BenchRecord> run_dataset(const DatasetSpec& dataset,
                                     std::span<const Algorithm> algorithms,
                                     const SuiteOptions& options) {
  const WordSpec spec(dataset.w);
  const std::vector<word_t> input = generate(dataset);
  const std::vector<word_t> expected = oracle_sort(input);
  const word_t m = value_range(input);

  std::vector<BenchRecord> records;
  for (const Algorithm algorithm : algorithms) {
    if (algorithm == Algorithm::counting_baseline && m > options.counting_cap) {
      continue;
    }
    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
      std::vector<word_t> work = input;
      const RunResult result = run_one(algorithm, work, spec);
      if (work != expected) {
        throw Error(ErrorKind::verification_failed,
                    std::string(to_string(algorithm)) + " produced a wrong result on " +
                        std::string(to_string(dataset.family)) +
                        " n=" + std::to_string(dataset.n) +
                        " w=" + std::to_string(dataset.w) +
                        " seed=" + std::to_string(dataset.seed));
      }
      BenchRecord rec;
      rec.algorithm = algorithm;
      rec.family = dataset.family;
      rec.n = input.size();
      rec.m = m;
      rec.w = dataset.w;
      rec.passes = result.passes;
      rec.words_scanned = result.words_scanned;
      const auto nanos = static_cast<std::uint64_t>(result.elapsed.count());
      rec.nanos = input.empty() ? nanos : std::max<std::uint64_t>(1, nanos);
      rec.seed = dataset.seed;
      records.push_back(rec);
    }
  }
  return records;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::parse_error,
                "csv line " + std::to_string(line) + ": bad number '" +
                    std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::assoc: return "assoc";
    case Algorithm::oracle_comparison: return "oracle_comparison";
    case Algorithm::counting_baseline: return "counting_baseline";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (const Algorithm a : {Algorithm::assoc, Algorithm::oracle_comparison,
                            Algorithm::counting_baseline}) {
    if (to_string(a) == name) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<BenchRecord> run_suite(std::span<const DatasetSpec> suite,
                                   std::span<const Algorithm> algorithms,
                                   const SuiteOptions& options) {
  std::vector<std::vector<BenchRecord>> per_dataset(suite.size());
  std::vector<std::exception_ptr> errors(suite.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < suite.size(); i = next++) {
      try {
        per_dataset[i] = run_dataset(suite[i], algorithms, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned workers = std::clamp<unsigned>(
      options.workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, suite.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(worker);
    }
  }

  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (errors[i]) {
      std::rethrow_exception(errors[i]);
    }
    records.insert(records.end(), per_dataset[i].begin(), per_dataset[i].end());
  }
  return records;
}

void emit_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << to_string(r.algorithm) << ',' << to_string(r.family) << ',' << r.n
        << ',' << r.m << ',' << r.w << ',' << r.passes << ','
        << r.words_scanned << ',' << r.nanos << ',' << r.seed << '\n';
  }
  out.flush();
  if (!out) {
    throw Error(ErrorKind::io_failure, "failed to write csv");
  }
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) {
        throw Error(ErrorKind::parse_error, "csv: unexpected header");
      }
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 9) {
      throw Error(ErrorKind::parse_error,
                  "csv line " + std::to_string(line_no) + ": expected 9 fields");
    }
    BenchRecord r;
    const auto algorithm = parse_algorithm(fields[0]);
    const auto family = parse_family(fields[1]);
    if (!algorithm || !family) {
      throw Error(ErrorKind::parse_error,
                  "csv line " + std::to_string(line_no) + ": unknown name");
    }
    r.algorithm = *algorithm;
    r.family = *family;
    r.n = parse_field<std::size_t>(fields[2], line_no);
    r.m = parse_field<word_t>(fields[3], line_no);
    r.w = parse_field<unsigned>(fields[4], line_no);
    r.passes = parse_field<std::size_t>(fields[5], line_no);
    r.words_scanned = parse_field<std::uint64_t>(fields[6], line_no);
    r.nanos = parse_field<std::uint64_t>(fields[7], line_no);
    r.seed = parse_field<std::uint64_t>(fields[8], line_no);
    records.push_back(r);
  }
  return records;
}

}  // namespace assort
