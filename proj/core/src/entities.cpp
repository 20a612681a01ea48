#include "tweetlex/entities.hpp"

#include <algorithm>

#include "tweetlex/text.hpp"

namespace tweetlex {

void FrequencyTable::add(std::string_view key, std::uint64_t n) {
  if (n == 0) return;
  auto it = counts_.find(key);
  if (it == counts_.end()) {
    counts_.emplace(std::string(key), n);
  } else {
    it->second += n;
  }
  total_ += n;
}

std::uint64_t FrequencyTable::count(std::string_view key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

FrequencyTable& FrequencyTable::operator+=(const FrequencyTable& other) {
  for (const auto& [key, n] : other.counts_) add(key, n);
  return *this;
}

std::string hashtag_key(std::string_view tag) { return text::ascii_upper(tag); }

void add_mentions(FrequencyTable& table, const CleanTweet& tweet) {
  for (const auto& m : tweet.mentions) table.add(m);
}

void add_hashtags(FrequencyTable& table, const CleanTweet& tweet) {
  for (const auto& h : tweet.hashtags) table.add(hashtag_key(h));
}

FrequencyTable mention_frequencies(std::span<const CleanTweet> tweets) {
  FrequencyTable table;
  for (const auto& t : tweets) add_mentions(table, t);
  return table;
}

FrequencyTable hashtag_frequencies(std::span<const CleanTweet> tweets) {
  FrequencyTable table;
  for (const auto& t : tweets) add_hashtags(table, t);
  return table;
}

std::vector<RankedEntry> ranked(const FrequencyTable& table) {
  std::vector<RankedEntry> out(table.entries().begin(), table.entries().end());
  std::sort(out.begin(), out.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<RankedEntry> top_n(const FrequencyTable& table, std::size_t n) {
  std::vector<RankedEntry> out(table.entries().begin(), table.entries().end());
  const auto keep = std::min(n, out.size());
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(keep), out.end(),
                    [](const RankedEntry& a, const RankedEntry& b) {
                      if (a.second != b.second) return a.second > b.second;
                      return a.first < b.first;
                    });
  out.resize(keep);
  return out;
}

std::string mention_key(std::string_view user) {
  auto t = text::trim(user);
  if (!t.empty() && t.front() == '@') t.remove_prefix(1);
  return text::to_lower(t);
}

bool mentions_user(const CleanTweet& tweet, std::string_view user) {
  return std::find(tweet.mentions.begin(), tweet.mentions.end(), user) != tweet.mentions.end();
}

std::vector<TagResult> filter_by_mention(std::span<const AnalyzedTweet> tweets,
                                         std::string_view user) {
  const auto key = mention_key(user);
  std::vector<TagResult> out;
  for (const auto& t : tweets) {
    if (mentions_user(t.clean, key)) out.push_back(t.tags);
  }
  return out;
}

}  // namespace tweetlex
