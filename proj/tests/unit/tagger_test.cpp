#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "brute_force.hpp"
#include "corpus.hpp"
#include "tie_fixtures.hpp"
#include "tweetlex/lexicon.hpp"
#include "tweetlex/preprocess.hpp"
#include "tweetlex/tagger.hpp"

using namespace tweetlex;
using Strings = std::vector<std::string>;

namespace {

Lexicon parse(const std::string& s) {
  std::istringstream in(s);
  return Lexicon::parse(in);
}

const Lexicon& toy() {
  static const auto lex = parse(
      "happy\tjoy\t1\nhappy\tpositive\t1\n"
      "scam\tanger\t1\nscam\tdisgust\t1\nscam\tnegative\t1\n"
      "trust\ttrust\t1\ntrust\tpositive\t1\n");
  return lex;
}

CategoryCounts counts_of(const Strings& tokens) {
  return count_categories(tag_tokens(tokens, toy()));
}

}  // namespace

TEST(Tagger, TagTokens) {
  const Strings tokens{"happy", "tax"};
  const auto tagged = tag_tokens(tokens, toy());
  ASSERT_EQ(tagged.size(), 2u);
  EXPECT_EQ(tagged[0], (TaggedToken{"happy", {Category::joy, Category::positive}}));
  EXPECT_EQ(tagged[1], (TaggedToken{"tax", {}}));
  EXPECT_TRUE(tag_tokens(Strings{}, toy()).empty());

  const Strings twice{"scam", "scam"};
  for (const auto& t : tag_tokens(twice, toy())) {
    EXPECT_EQ(t.categories, (CategorySet{Category::anger, Category::disgust, Category::negative}));
  }
}

TEST(Tagger, CountCategories) {
  auto c = counts_of({"scam", "scam"});
  EXPECT_EQ(c[Category::anger], 2u);
  EXPECT_EQ(c[Category::disgust], 2u);
  EXPECT_EQ(c[Category::negative], 2u);
  EXPECT_EQ(c.total(), 6u);

  EXPECT_EQ(counts_of({}).total(), 0u);

  c = counts_of({"happy", "trust"});
  EXPECT_EQ(c[Category::joy], 1u);
  EXPECT_EQ(c[Category::trust], 1u);
  EXPECT_EQ(c[Category::positive], 2u);
  EXPECT_EQ(c.total(), 4u);
}

TEST(Tagger, LabelExamples) {
  EXPECT_EQ(label(counts_of({"happy", "trust"})),
            (Labels{Label::positive, Label::joy, Label::positive, true}));
  EXPECT_EQ(label(CategoryCounts{}), (Labels{Label::neutral, Label::neutral, Label::neutral, false}));

  CategoryCounts c;
  c[Category::negative] = 3;
  c[Category::sadness] = 3;
  EXPECT_EQ(label(c), (Labels{Label::negative, Label::sadness, Label::negative, true}));
}

TEST(Tagger, TagTweet) {
  CleanTweet blank;
  blank.record_id = "b";
  const auto r = tag_tweet(blank, toy());
  EXPECT_EQ(r.record_id, "b");
  EXPECT_EQ(r.labels, Labels{});

  CleanTweet one;
  one.tokens = {"happy"};
  one.is_blank = false;
  EXPECT_EQ(tag_tweet(one, toy()).labels, (Labels{Label::positive, Label::joy, Label::positive, true}));
}

TEST(Tagger, TieFixtures) {
  const auto lex = parse(support::kTieLexicon);
  for (const auto& f : support::kTieFixtures) {
    const auto r = tag_tweet(preprocess_text("t", f.text, {}), lex);
    EXPECT_EQ(name_of(r.labels.sentiment), f.sentiment) << f.text;
    EXPECT_EQ(name_of(r.labels.emotion), f.emotion) << f.text;
    EXPECT_EQ(name_of(r.labels.overall), f.overall) << f.text;
    EXPECT_EQ(r.labels.tied, f.tied) << f.text;
  }
}

TEST(TaggerProperty, MatchesBruteForceOracle) {
  const auto toy_lex = support::make_toy_lexicon(42);
  const auto lex = parse(toy_lex.text);
  support::Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const auto tweet = support::make_noisy_tweet(rng, toy_lex.words);
    const auto clean = preprocess_text("x", tweet.text, {});
    ASSERT_EQ(clean.tokens, tweet.tokens) << tweet.text;
    const auto counts = support::brute_force_counts(toy_lex.text, tweet.tokens);
    EXPECT_TRUE(support::agrees(tag_tweet(clean, lex), counts, support::brute_force_labels(counts)))
        << tweet.text;
  }
}

TEST(TaggerProperty, PermutationInvariance) {
  const auto toy_lex = support::make_toy_lexicon(5);
  const auto lex = parse(toy_lex.text);
  support::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    CleanTweet clean = preprocess_text("x", support::make_noisy_tweet(rng, toy_lex.words).text, {});
    const auto before = tag_tweet(clean, lex);
    std::shuffle(clean.tokens.begin(), clean.tokens.end(), rng);
    EXPECT_EQ(tag_tweet(clean, lex), before);
  }
}

TEST(TaggerProperty, RemovingATokenNeverIncreasesCounts) {
  const auto toy_lex = support::make_toy_lexicon(6);
  const auto lex = parse(toy_lex.text);
  support::Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    CleanTweet clean = preprocess_text("x", support::make_noisy_tweet(rng, toy_lex.words).text, {});
    if (clean.tokens.empty()) continue;
    const auto before = tag_tweet(clean, lex).counts;
    clean.tokens.erase(clean.tokens.begin() + static_cast<long>(support::uniform(rng, clean.tokens.size())));
    const auto after = tag_tweet(clean, lex).counts;
    for (auto c : kAllCategories) EXPECT_LE(after[c], before[c]);
  }
}

TEST(TaggerProperty, OverallNeutralImpliesAllNeutral) {
  const auto toy_lex = support::make_toy_lexicon(8);
  const auto lex = parse(toy_lex.text);
  support::Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const auto r = tag_tweet(preprocess_text("x", support::make_noisy_tweet(rng, toy_lex.words).text, {}), lex);
    if (r.labels.overall == Label::neutral) {
      EXPECT_EQ(r.labels.sentiment, Label::neutral);
      EXPECT_EQ(r.labels.emotion, Label::neutral);
      EXPECT_EQ(r.counts.total(), 0u);
    }
  }
}
