#include "dtriple/table_io.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dtriple {
namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_table(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseError(0, 0, "none");
}

TEST(ParseTable, Table1File) {
  auto text = testing::read_file(std::string(DTRIPLE_DATA_DIR) + "/table1.tbl");
  EXPECT_EQ(parse_table(text), table1_algebra());
}

TEST(ParseTable, SingletonCarrier) {
  auto a = parse_table("1\n0\n");
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.op(0, 0), 0u);
}

TEST(ParseTable, CommentsAndBlankLines) {
  auto a = parse_table("# header\n\n2\n# between rows\n0 0\n1   0\n");
  EXPECT_EQ(a, bck_chain2());
}

TEST(ParseTable, EntryOutOfRangeReportsToken) {
  auto e = parse_error("5\n0 0 0 0 0\n1 0 2 0 7\n2 2 0 3 0\n3 3 3 0 3\n4 4 4 1 0\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 9u);
  EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
}

TEST(ParseTable, MalformedHeader) {
  EXPECT_EQ(parse_error("two\n").line(), 1u);
  EXPECT_EQ(parse_error("2 2\n0 0\n1 0\n").column(), 3u);
  EXPECT_EQ(parse_error("0\n").line(), 1u);
  EXPECT_EQ(parse_error("# only comments\n").line(), 2u);
}

TEST(ParseTable, NonIntegerToken) {
  auto e = parse_error("2\n0 0\n1 x\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 3u);
  EXPECT_EQ(parse_error("2\n0 -1\n1 0\n").column(), 3u);
}

TEST(ParseTable, RowCountMismatch) {
  EXPECT_EQ(parse_error("2\n0 0\n").line(), 3u);
  EXPECT_EQ(parse_error("2\n0 0\n1 0\n1 0\n").line(), 4u);
  EXPECT_EQ(parse_error("2\n0 0 0\n1 0\n").column(), 5u);
  EXPECT_EQ(parse_error("2\n0\n1 0\n").line(), 2u);
}

TEST(EmitTable, CanonicalForm) {
  EXPECT_EQ(emit_table(bck_chain2()), "2\n0 0\n1 0\n");
  EXPECT_EQ(emit_table(bck_chain2(), {"id: 0"}), "# id: 0\n2\n0 0\n1 0\n");
}

TEST(EmitTable, RoundTripProperty) {
  for (int i = 0; i < 300; ++i) {
    auto n = 1 + static_cast<std::size_t>(i % 12);
    auto a = testing::random_table(n);
    auto text = emit_table(a);
    auto back = parse_table(text);
    EXPECT_EQ(back, a);
    EXPECT_EQ(emit_table(back), text);
  }
}

}  // namespace
}  // namespace dtriple
