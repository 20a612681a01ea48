#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tweetlex/errors.hpp"
#include "tweetlex/lexicon.hpp"

using namespace tweetlex;

namespace {

Lexicon parse(const std::string& s) {
  std::istringstream in(s);
  return Lexicon::parse(in);
}

}  // namespace

TEST(Lexicon, LoadsFlaggedCategories) {
  const auto lex = parse("glee\tjoy\t1\nglee\tpositive\t1\nglee\tanger\t0\n");
  EXPECT_EQ(lex.categories_of("glee"), (CategorySet{Category::joy, Category::positive}));
  EXPECT_EQ(lex.entry_count(), 1u);
  EXPECT_TRUE(lex.categories_of("zzzznotaword").empty());
  EXPECT_EQ(lex.categories_of("GLEE"), lex.categories_of("glee"));
  EXPECT_EQ(lex.categories_of("Glee"), lex.categories_of("glee"));
}

TEST(Lexicon, EmptyFile) { EXPECT_EQ(parse("").entry_count(), 0u); }

TEST(Lexicon, AllZeroWordIsAbsent) {
  std::string rows;
  for (auto c : kAllCategories) rows += "meh\t" + std::string(name_of(c)) + "\t0\n";
  const auto lex = parse(rows);
  EXPECT_EQ(lex.entry_count(), 0u);
  EXPECT_TRUE(lex.categories_of("meh").empty());
}

TEST(Lexicon, CommentsBlankLinesAndCrlf) {
  const auto lex = parse("# header\n\nabandon\tfear\t1\r\nabandon\tnegative\t1\r\n");
  EXPECT_EQ(lex.categories_of("abandon"), (CategorySet{Category::fear, Category::negative}));
}

TEST(Lexicon, FatalErrors) {
  auto expect_error = [](const std::string& contents, const std::string& fragment) {
    try {
      parse(contents);
      FAIL() << "no error for: " << contents;
    } catch (const LoadError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("ok\tjoy\t1\nglee\tjubilation\t1\n", "<stream>:2:");
  expect_error("glee\tjoy\t2\n", "<stream>:1:");
  expect_error("glee\tjoy\t1\nglee\tjoy\t1\n", "<stream>:2:");
  expect_error("glee\tjoy\n", "<stream>:1:");
  expect_error("two words\tjoy\t1\n", "<stream>:1:");
}

TEST(Lexicon, MissingFileIsIoError) {
  EXPECT_THROW(Lexicon::load("/nonexistent/lexicon.txt"), IoError);
}

TEST(LexiconProperty, QueriesArePure) {
  const auto lex = parse(support::make_toy_lexicon(3).text);
  for (const auto& [word, cats] : lex.entries()) {
    EXPECT_EQ(lex.categories_of(word), cats);
    EXPECT_EQ(lex.categories_of(word), lex.categories_of(word));
  }
}

TEST(LexiconProperty, EntryCountMatchesLineScan) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto toy = support::make_toy_lexicon(seed);
    std::set<std::string> flagged;
    std::istringstream lines(toy.text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.back() == '1') flagged.insert(line.substr(0, line.find('\t')));
    }
    EXPECT_EQ(parse(toy.text).entry_count(), flagged.size()) << "seed " << seed;
  }
}

TEST(Lexicon, ShippedSampleLoads) {
  const auto lex = Lexicon::load(support::kDataDir / "sample_lexicon.txt");
  EXPECT_GT(lex.entry_count(), 0u);
}
