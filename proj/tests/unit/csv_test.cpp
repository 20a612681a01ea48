#include <gtest/gtest.h>

#include <sstream>

#include "tweetlex/csv.hpp"

using namespace tweetlex;

TEST(Csv, QuotedFields) {
  const auto r = csv::parse_line(R"(1,"a, ""b""",,x)");
  ASSERT_TRUE(r.well_formed);
  ASSERT_EQ(r.fields.size(), 4u);
  EXPECT_EQ(r.fields[1], "a, \"b\"");
  EXPECT_EQ(r.fields[2], "");
}

TEST(Csv, StrayQuoteIsMalformed) {
  EXPECT_FALSE(csv::parse_line(R"(1,ab"c,x)").well_formed);
  EXPECT_FALSE(csv::parse_line(R"(1,"abc)").well_formed);
}

TEST(Csv, ReaderJoinsMultiLineFieldsAndTracksLines) {
  std::istringstream in("h1,h2\r\n1,\"two\nlines\"\n2,x\n");
  csv::Reader reader(in);
  csv::Record rec;
  ASSERT_TRUE(reader.next(rec));
  EXPECT_EQ(rec.line, 1u);
  EXPECT_EQ(rec.fields[1], "h2");
  ASSERT_TRUE(reader.next(rec));
  EXPECT_EQ(rec.line, 2u);
  EXPECT_EQ(rec.fields[1], "two\nlines");
  ASSERT_TRUE(reader.next(rec));
  EXPECT_EQ(rec.line, 4u);
  EXPECT_EQ(rec.fields[0], "2");
  EXPECT_FALSE(reader.next(rec));
}

TEST(Csv, EscapeRoundTrips) {
  for (std::string s : {"plain", "a,b", "say \"hi\"", "multi\nline"}) {
    const auto r = csv::parse_line("x," + csv::escape(s));
    ASSERT_EQ(r.fields.size(), 2u) << s;
    EXPECT_EQ(r.fields[1], s);
  }
  EXPECT_EQ(csv::escape("plain"), "plain");
}
