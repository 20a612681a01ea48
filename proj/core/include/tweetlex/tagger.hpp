#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tweetlex/category.hpp"
#include "tweetlex/lexicon.hpp"
#include "tweetlex/preprocess.hpp"

namespace tweetlex {

struct CategoryCounts {
  std::array<std::uint32_t, kCategoryCount> values{};

  std::uint32_t& operator[](Category c) { return values[index_of(c)]; }
  std::uint32_t operator[](Category c) const { return values[index_of(c)]; }
  std::uint64_t total() const;

  friend bool operator==(const CategoryCounts&, const CategoryCounts&) = default;
};

struct TaggedToken {
  std::string token;
  CategorySet categories;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct Labels {
  Label sentiment = Label::neutral;
  Label emotion = Label::neutral;
  Label overall = Label::neutral;
  bool tied = false;

  Label of(Channel ch) const;
  friend bool operator==(const Labels&, const Labels&) = default;
};

struct TagResult {
  std::string record_id;
  CategoryCounts counts;
  Labels labels;

  friend bool operator==(const TagResult&, const TagResult&) = default;
};

std::vector<TaggedToken> tag_tokens(std::span<const std::string> tokens, const Lexicon& lex);

/// Each token occurrence contributes at most one to each category.
CategoryCounts count_categories(std::span<const TaggedToken> tagged);

/// Max-count labeling per channel. Zero maxima give neutral; ties resolve
/// to the earliest category in Category enumerator order and set `tied`.
Labels label(const CategoryCounts& counts);

TagResult tag_tweet(const CleanTweet& clean, const Lexicon& lex);

}  // namespace tweetlex
