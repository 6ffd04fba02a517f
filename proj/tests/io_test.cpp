#include "assort/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "assort/errors.hpp"

namespace assort {
namespace {

using Words = std::vector<word_t>;

Words read_text(const std::string& text, unsigned w = kHostBits) {
  std::istringstream in(text);
  return read_list(in, FileFormat::text, WordSpec(w));
}

std::string error_message(auto&& fn, ErrorKind want) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), want);
    return e.what();
  }
  ADD_FAILURE() << "no assort::Error thrown";
  return {};
}

TEST(ReadList, Text) {
  EXPECT_EQ(read_text("3\n1\n2\n"), (Words{3, 1, 2}));
  EXPECT_EQ(read_text("3\n1\n2"), (Words{3, 1, 2}));
  EXPECT_TRUE(read_text("").empty());
  EXPECT_EQ(read_text("18446744073709551615\n"), (Words{~word_t{0}}));
}

TEST(ReadList, TextRejectsMalformedLines) {
  const auto msg = error_message([] { read_text("1\nx\n"); }, ErrorKind::parse_error);
  EXPECT_NE(msg.find("line 2"), std::string::npos);
  error_message([] { read_text("1\n\n2\n"); }, ErrorKind::parse_error);
  error_message([] { read_text("-1\n"); }, ErrorKind::parse_error);
  error_message([] { read_text(" 1\n"); }, ErrorKind::parse_error);
  error_message([] { read_text("1 \n"); }, ErrorKind::parse_error);
  error_message([] { read_text("1\r\n"); }, ErrorKind::parse_error);
}

TEST(ReadList, ValueExceedsUniverse) {
  const auto msg = error_message([] { read_text("3\n16\n", 4); },
                                 ErrorKind::value_exceeds_universe);
  EXPECT_NE(msg.find("index 1"), std::string::npos);
  EXPECT_EQ(read_text("15\n", 4), (Words{15}));
  error_message([] { read_text("18446744073709551616\n"); },
                ErrorKind::value_exceeds_universe);
}

TEST(ReadList, BinaryTruncatedRecord) {
  std::istringstream in(std::string("\x01\0\0\0\0\0\0\0\x02\0\0", 11));
  const auto msg = error_message(
      [&] { read_list(in, FileFormat::binary, WordSpec()); }, ErrorKind::parse_error);
  EXPECT_NE(msg.find("byte 8"), std::string::npos);
}

TEST(WriteList, TextLayout) {
  std::ostringstream out;
  write_list(Words{1, 2, 3}, out, FileFormat::text);
  EXPECT_EQ(out.str(), "1\n2\n3\n");
  std::ostringstream empty;
  write_list(Words{}, empty, FileFormat::text);
  EXPECT_EQ(empty.str(), "");
}

TEST(WriteList, BinaryIsLittleEndian) {
  std::ostringstream out;
  write_list(Words{0x0102030405060708ULL}, out, FileFormat::binary);
  EXPECT_EQ(out.str(), std::string("\x08\x07\x06\x05\x04\x03\x02\x01", 8));
}

TEST(ListFormats, RoundTripRandomLists) {
  std::mt19937_64 rng(1000);
  for (const FileFormat format : {FileFormat::text, FileFormat::binary}) {
    for (int trial = 0; trial < 20; ++trial) {
      Words v(std::uniform_int_distribution<std::size_t>(0, 1000)(rng));
      for (auto& x : v) x = rng();
      std::stringstream buf;
      write_list(v, buf, format);
      EXPECT_EQ(read_list(buf, format, WordSpec()), v);
    }
  }
}

TEST(ListFormats, ParseFormatNames) {
  EXPECT_EQ(parse_format("text"), FileFormat::text);
  EXPECT_EQ(parse_format("binary"), FileFormat::binary);
  EXPECT_FALSE(parse_format("csv"));
}

}  // namespace
}  // namespace assort
