#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "assort/word_spec.hpp"

namespace assort {

/// On-disk list formats.
///   text    one decimal integer per line, no blank lines, optional final
///           newline
///   binary  little-endian 8-byte unsigned integers, no header
enum class FileFormat { text, binary };

std::optional<FileFormat> parse_format(std::string_view name) noexcept;

/// Throws Error{parse_error} with the line (text) or byte offset (binary) of
/// the first malformed record, Error{value_exceeds_universe} for a value
/// >= 2^w.
std::vector<word_t> read_list(std::istream& in, FileFormat format,
                              const WordSpec& spec);

/// Throws Error{io_failure} if the stream goes bad.
void write_list(std::span<const word_t> values, std::ostream& out,
                FileFormat format);

}  // namespace assort
