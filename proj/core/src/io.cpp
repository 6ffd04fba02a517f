#include "assort/io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "assort/errors.hpp"

namespace assort {
namespace {

void check_universe(word_t value, std::size_t index, const WordSpec& spec) {
  if (value > spec.universe_max()) {
    throw Error(ErrorKind::value_exceeds_universe,
                "value " + std::to_string(value) + " at index " +
                    std::to_string(index) + " does not fit in " +
                    std::to_string(spec.bits()) + " bits");
  }
}

[[noreturn]] void parse_failure(const std::string& where,
                                const std::string& what) {
  throw Error(ErrorKind::parse_error, where + ": " + what);
}

std::vector<word_t> read_text(std::istream& in, const WordSpec& spec) {
  const std::string data{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  std::vector<word_t> values;
  std::size_t pos = 0;
  std::size_t line = 1;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    if (end == std::string::npos) {
      end = data.size();
    }
    const char* first = data.data() + pos;
    const char* last = data.data() + end;
    const std::string where = "line " + std::to_string(line);
    if (first == last) {
      parse_failure(where, "blank line");
    }
    word_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorKind::value_exceeds_universe,
                  where + ": value does not fit in 64 bits");
    }
    if (ec != std::errc{} || ptr != last) {
      parse_failure(where, "expected a non-negative decimal integer, got '" +
                               std::string(first, last) + "'");
    }
    check_universe(value, values.size(), spec);
    values.push_back(value);
    pos = end + 1;
    ++line;
  }
  return values;
}

std::vector<word_t> read_binary(std::istream& in, const WordSpec& spec) {
  std::vector<word_t> values;
  std::array<char, 8> buf{};
  for (;;) {
    in.read(buf.data(), buf.size());
    const auto got = static_cast<std::size_t>(in.gcount());
    if (got == 0) {
      break;
    }
    if (got != buf.size()) {
      parse_failure("byte " + std::to_string(values.size() * 8),
                    "truncated record (" + std::to_string(got) + " of 8 bytes)");
    }
    word_t value = 0;
    for (std::size_t b = 0; b < buf.size(); ++b) {
      value |= static_cast<word_t>(static_cast<unsigned char>(buf[b])) << (8 * b);
    }
    check_universe(value, values.size(), spec);
    values.push_back(value);
  }
  return values;
}

}  // namespace

std::optional<FileFormat> parse_format(std::string_view name) noexcept {
  if (name == "text") return FileFormat::text;
  if (name == "binary") return FileFormat::binary;
  return std::nullopt;
}

std::vector<word_t> read_list(std::istream& in, FileFormat format,
                              const WordSpec& spec) {
  return format == FileFormat::text ? read_text(in, spec)
                                    : read_binary(in, spec);
}

void write_list(std::span<const word_t> values, std::ostream& out,
                FileFormat format) {
  if (format == FileFormat::text) {
    std::array<char, 24> buf{};
    for (const word_t v : values) {
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
      *res.ptr = '\n';
      out.write(buf.data(), res.ptr - buf.data() + 1);
    }
  } else {
    std::array<char, 8> buf{};
    for (const word_t v : values) {
      for (std::size_t b = 0; b < buf.size(); ++b) {
        buf[b] = static_cast<char>((v >> (8 * b)) & 0xff);
      }
      out.write(buf.data(), buf.size());
    }
  }
  out.flush();
  if (!out) {
    throw Error(ErrorKind::io_failure, "failed to write list");
  }
}

}  // namespace assort
