#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tweetlex/lexicon.hpp"
#include "tweetlex/preprocess.hpp"
#include "tweetlex/tagger.hpp"

namespace tweetlex {

class FrequencyTable {
 public:
  void add(std::string_view key, std::uint64_t n = 1);

  std::uint64_t count(std::string_view key) const;
  std::uint64_t total_occurrences() const { return total_; }
  std::size_t distinct_keys() const { return counts_.size(); }
  const auto& entries() const { return counts_; }

  FrequencyTable& operator+=(const FrequencyTable& other);
  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>> counts_;
  std::uint64_t total_ = 0;
};

using RankedEntry = std::pair<std::string, std::uint64_t>;

/// Merge key for hashtags: ASCII uppercase.
std::string hashtag_key(std::string_view tag);

void add_mentions(FrequencyTable& table, const CleanTweet& tweet);
void add_hashtags(FrequencyTable& table, const CleanTweet& tweet);

FrequencyTable mention_frequencies(std::span<const CleanTweet> tweets);
FrequencyTable hashtag_frequencies(std::span<const CleanTweet> tweets);

/// Count descending, then key ascending; at most n entries.
std::vector<RankedEntry> top_n(const FrequencyTable& table, std::size_t n);

/// Full table in top_n order.
std::vector<RankedEntry> ranked(const FrequencyTable& table);

/// Normalizes a user argument ("@NarendraModi" -> "narendramodi").
std::string mention_key(std::string_view user);

/// `key` must already be normalized with mention_key.
bool mentions_user(const CleanTweet& tweet, std::string_view key);

struct AnalyzedTweet {
  CleanTweet clean;
  TagResult tags;
};

/// Tag results of tweets whose mention list contains `user`, once per tweet.
/// `user` is normalized with mention_key first.
std::vector<TagResult> filter_by_mention(std::span<const AnalyzedTweet> tweets,
                                         std::string_view user);

}  // namespace tweetlex
