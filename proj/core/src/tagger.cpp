#include "tweetlex/tagger.hpp"

#include <numeric>

namespace tweetlex {

namespace {

struct Pick {
  Label label = Label::neutral;
  bool tied = false;
};

// Argmax over `candidates` in the given order; the first maximal entry
// wins. All-zero counts produce neutral.
template <std::size_t N>
Pick argmax(const CategoryCounts& counts, const std::array<Category, N>& candidates) {
  Pick pick;
  std::uint32_t best = 0;
  int holders = 0;
  for (auto c : candidates) {
    const auto v = counts[c];
    if (v == 0) continue;
    if (v > best) {
      best = v;
      pick.label = to_label(c);
      holders = 1;
    } else if (v == best) {
      ++holders;
    }
  }
  pick.tied = holders >= 2;
  return pick;
}

}  // namespace

std::uint64_t CategoryCounts::total() const {
  return std::accumulate(values.begin(), values.end(), std::uint64_t{0});
}

Label Labels::of(Channel ch) const {
  switch (ch) {
    case Channel::sentiment: return sentiment;
    case Channel::emotion: return emotion;
    case Channel::overall: return overall;
  }
  return Label::neutral;
}

std::vector<TaggedToken> tag_tokens(std::span<const std::string> tokens, const Lexicon& lex) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) out.push_back({tok, lex.categories_of(tok)});
  return out;
}

CategoryCounts count_categories(std::span<const TaggedToken> tagged) {
  CategoryCounts counts;
  for (const auto& t : tagged) {
    for (auto c : kAllCategories) {
      if (t.categories.contains(c)) ++counts[c];
    }
  }
  return counts;
}

Labels label(const CategoryCounts& counts) {
  const auto s = argmax(counts, kSentiments);
  const auto e = argmax(counts, kEmotions);
  const auto o = argmax(counts, kAllCategories);
  return {s.label, e.label, o.label, s.tied || e.tied || o.tied};
}

TagResult tag_tweet(const CleanTweet& clean, const Lexicon& lex) {
  TagResult result;
  result.record_id = clean.record_id;
  for (const auto& tok : clean.tokens) {
    const auto bits = lex.categories_of(tok).bits();
    for (std::size_t i = 0; i < kCategoryCount; ++i) result.counts.values[i] += (bits >> i) & 1u;
  }
  result.labels = label(result.counts);
  return result;
}

}  // namespace tweetlex
