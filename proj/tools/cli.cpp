#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "assort/bench.hpp"
#include "assort/errors.hpp"
#include "assort/generators.hpp"
#include "assort/io.hpp"
#include "assort/sort.hpp"
#include "assort/verify.hpp"

namespace assort::cli {
namespace {

constexpr std::size_t kTraceWarnLimit = 256;

struct CommandConfig {
  std::string input;
  std::string output;
  std::string format = "text";
  unsigned word_bits = kHostBits;
  bool word_bits_set = false;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string families = "uniform,best_case,adversarial";
  std::string n_list = "1024";
  std::string beta_list = "2";
  std::size_t reps = 3;
  std::string csv;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

FileFormat format_of(const CommandConfig& config) {
  const auto format = parse_format(config.format);
  if (!format) {
    throw UsageError("--format must be text or binary");
  }
  return *format;
}

std::vector<word_t> load_input(const CommandConfig& config, std::istream& in,
                               const WordSpec& spec) {
  const FileFormat format = format_of(config);
  if (config.input == "-") {
    return read_list(in, format, spec);
  }
  std::ifstream file(config.input, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::io_failure, "cannot open " + config.input);
  }
  return read_list(file, format, spec);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::size_t parse_size(const std::string& token) {
  std::size_t used = 0;
  if (const auto caret = token.find('^'); caret != std::string::npos) {
    const auto base = std::stoull(token.substr(0, caret), &used);
    if (used != caret) throw std::invalid_argument("bad size '" + token + "'");
    const auto exp = std::stoull(token.substr(caret + 1), &used);
    if (used != token.size() - caret - 1 || exp > 63) {
      throw std::invalid_argument("bad size '" + token + "'");
    }
    std::size_t value = 1;
    for (unsigned long long e = 0; e < exp; ++e) value *= base;
    return value;
  }
  const auto value = std::stoull(token, &used);
  if (used != token.size()) throw std::invalid_argument("bad size '" + token + "'");
  return value;
}

int cmd_sort(const CommandConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const WordSpec spec(config.word_bits);
  std::vector<word_t> values = load_input(config, in, spec);
  const SortReport report = sort(values, spec);

  if (config.output.empty() || config.output == "-") {
    write_list(values, out, format_of(config));
  } else {
    std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw Error(ErrorKind::io_failure, "cannot open " + config.output);
    }
    write_list(values, file, format_of(config));
  }
  err << "sorted n=" << values.size() << " passes=" << report.pass_count
      << " words_scanned=" << report.work.words_scanned
      << " nanos=" << report.elapsed.count() << '\n';
  return kExitOk;
}

int cmd_verify(const CommandConfig& config, std::ostream& out,
               std::ostream& err) {
  VerifyOptions options;
  options.trials = config.trials;
  options.seed = config.seed;
  if (config.word_bits_set) {
    options.widths = {config.word_bits};
  }
  if (options.trials == 0) {
    err << "warning: --trials 0, no checks run\n";
  }
  const VerifySummary summary = run_verification(options);
  for (const SuiteOutcome& suite : summary.suites) {
    out << (suite.failures == 0 ? "PASS " : "FAIL ") << suite.name
        << " checks=" << suite.checks << " failures=" << suite.failures << '\n';
    if (suite.failures != 0) {
      err << "first failure in " << suite.name << ": " << suite.first_failure
          << '\n';
    }
  }
  out << "total checks=" << summary.checks()
      << " failures=" << summary.failures() << '\n';
  return summary.passed() ? kExitOk : kExitFailure;
}

int cmd_bench(const CommandConfig& config, std::ostream& err) {
  if (config.csv.empty()) {
    throw UsageError("bench requires --csv");
  }
  std::vector<Family> families;
  for (const auto& name : split(config.families)) {
    const auto family = parse_family(name);
    if (!family) throw UsageError("unknown family '" + name + "'");
    families.push_back(*family);
  }
  std::vector<std::size_t> sizes;
  std::vector<double> betas;
  try {
    sizes = parse_size_list(config.n_list);
    for (const auto& b : split(config.beta_list)) betas.push_back(std::stod(b));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (families.empty() || sizes.empty() || betas.empty()) {
    throw UsageError("bench needs at least one family, n and beta");
  }

  std::vector<DatasetSpec> suite;
  for (const Family family : families) {
    for (const std::size_t n : sizes) {
      const std::size_t beta_count = family == Family::uniform ? betas.size() : 1;
      for (std::size_t b = 0; b < beta_count; ++b) {
        DatasetSpec d;
        d.family = family;
        d.n = n;
        d.beta = family == Family::uniform ? betas[b] : 1.0;
        d.w = config.word_bits;
        d.seed = config.seed + suite.size();
        suite.push_back(d);
      }
    }
  }

  const Algorithm algorithms[] = {Algorithm::assoc, Algorithm::oracle_comparison,
                                  Algorithm::counting_baseline};
  SuiteOptions options;
  options.repetitions = config.reps;
  options.workers = config.jobs;
  const auto records = run_suite(suite, algorithms, options);

  std::ofstream file(config.csv, std::ios::trunc);
  if (!file) {
    throw Error(ErrorKind::io_failure, "cannot open " + config.csv);
  }
  emit_csv(records, file);
  err << "bench datasets=" << suite.size() << " records=" << records.size()
      << " csv=" << config.csv << '\n';
  return kExitOk;
}

const char* classify(const PhaseSnapshot& snap, std::size_t index,
                     const WordSpec& spec) {
  const PassTally& t = snap.tally;
  const word_t word = snap.region[index];
  const auto in_range = [&] {
    return compute_hash(spec.low_bits(word), t.delta, snap.region.size(), spec)
        .has_value();
  };
  switch (snap.phase) {
    case Phase::practiced:
      if (spec.has_tag(word)) return "node";
      return in_range() ? "idle" : "out-of-range";
    case Phase::stored:
    case Phase::partitioned:
      if (index < t.node_count) return "record";
      return in_range() ? "idle" : "out-of-range";
    case Phase::retrieved:
      return index < t.sorted_count() ? "output" : "out-of-range";
    case Phase::singleton:
      return "output";
  }
  return "?";
}

int cmd_trace(const CommandConfig& config, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const WordSpec spec(config.word_bits);
  std::vector<word_t> values = load_input(config, in, spec);
  if (values.size() > kTraceWarnLimit) {
    err << "warning: tracing " << values.size() << " values (more than "
        << kTraceWarnLimit << ")\n";
  }
  SortOptions options;
  options.hook = [&](const PhaseSnapshot& snap) {
    const PassTally& t = snap.tally;
    out << "pass " << snap.pass << (snap.upper_half ? " upper" : "") << ' '
        << to_string(snap.phase) << " offset=" << snap.offset
        << " n=" << snap.region.size() << " delta=" << t.delta
        << " n_d=" << t.node_count << " n_c=" << t.idle_count
        << " n_d'=" << t.deferred_count;
    if (t.deferred_min) out << " delta'=" << *t.deferred_min;
    out << " cursor=" << snap.cursor << '\n';
    for (std::size_t i = 0; i < snap.region.size(); ++i) {
      out << "  [" << snap.offset + i << "] tag=" << (spec.has_tag(snap.region[i]) ? 1 : 0)
          << " low=" << spec.low_bits(snap.region[i]) << ' '
          << classify(snap, i, spec) << '\n';
    }
  };
  const SortReport report = sort(values, spec, options);
  out << "sorted:";
  for (const word_t v : values) out << ' ' << v;
  out << '\n';
  err << "traced n=" << values.size() << " passes=" << report.pass_count << '\n';
  return kExitOk;
}

}  // namespace

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (const auto& token : split(text)) {
    if (const auto dots = token.find(".."); dots != std::string::npos) {
      const std::size_t lo = parse_size(token.substr(0, dots));
      const std::size_t hi = parse_size(token.substr(dots + 2));
      if (lo == 0 || lo > hi) {
        throw std::invalid_argument("bad range '" + token + "'");
      }
      for (std::size_t n = lo; n <= hi; n *= 2) {
        sizes.push_back(n);
        if (n > hi / 2) break;
      }
    } else {
      sizes.push_back(parse_size(token));
    }
  }
  if (sizes.empty()) {
    throw std::invalid_argument("empty size list");
  }
  return sizes;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"In-place associative sort for distinct unsigned integers"};
  app.require_subcommand(1);
  CommandConfig config;

  const auto add_width = [&](CLI::App* sub) {
    sub->add_option("--word-bits", config.word_bits, "simulated word width w")
        ->check(CLI::Range(2u, kHostBits))
        ->each([&](const std::string&) { config.word_bits_set = true; });
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "text or binary")
        ->check(CLI::IsMember({"text", "binary"}));
  };

  CLI::App* sort_cmd = app.add_subcommand("sort", "sort a list file");
  sort_cmd->add_option("--input", config.input, "input path, - for stdin")->required();
  sort_cmd->add_option("--output", config.output, "output path (default stdout)");
  add_format(sort_cmd);
  add_width(sort_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--trials", config.trials, "trials per suite");
  verify_cmd->add_option("--seed", config.seed, "base seed");
  add_width(verify_cmd);

  CLI::App* bench_cmd = app.add_subcommand("bench", "benchmark and write CSV");
  bench_cmd->add_option("--families", config.families,
                        "comma list of uniform,adversarial,best_case,full_universe");
  bench_cmd->add_option("--n", config.n_list, "sizes, e.g. 1024,2^12,2^10..2^14");
  bench_cmd->add_option("--beta", config.beta_list, "uniform range multipliers");
  bench_cmd->add_option("--seed", config.seed, "base seed");
  bench_cmd->add_option("--reps", config.reps, "repetitions per dataset");
  bench_cmd->add_option("--csv", config.csv, "output CSV path")->required();
  bench_cmd->add_option("--jobs", config.jobs, "worker threads")
      ->check(CLI::Range(1u, 256u));
  add_width(bench_cmd);

  CLI::App* trace_cmd = app.add_subcommand("trace", "print every phase of a sort");
  trace_cmd->add_option("--input", config.input, "input path, - for stdin")->required();
  add_format(trace_cmd);
  add_width(trace_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sort_cmd->parsed()) return cmd_sort(config, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(config, out, err);
    if (bench_cmd->parsed()) return cmd_bench(config, err);
    if (trace_cmd->parsed()) return cmd_trace(config, in, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    out.flush();
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"assort"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace assort::cli
