#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tweetlex/ingest.hpp"
#include "tweetlex/lexicon.hpp"

namespace tweetlex {

struct CleanTweet {
  std::string record_id;
  std::vector<std::string> tokens;    // lowercase, >= 3 code points
  std::vector<std::string> hashtags;  // without '#', original case
  std::vector<std::string> mentions;  // without '@', lowercase
  std::vector<std::string> urls;
  bool is_blank = true;
  std::size_t non_latin_tokens = 0;
};

/// Stopword list: one word per line, '#' comments, stored lowercase.
class Stopwords {
 public:
  Stopwords() = default;
  Stopwords(std::initializer_list<std::string_view> words);

  static Stopwords load(const std::filesystem::path& path);
  static Stopwords parse(std::istream& in);

  void insert(std::string_view word);
  bool contains(std::string_view token) const { return words_.find(token) != words_.end(); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string, StringHash, std::equal_to<>> words_;
};

/// '@' followed by a maximal run of letters, digits or '_', lowercased.
std::vector<std::string> extract_mentions(std::string_view text);

/// '#' followed by a maximal run of letters, digits or '_', case kept.
std::vector<std::string> extract_hashtags(std::string_view text);

/// Every http://, https:// or www. prefix followed by non-space characters.
std::vector<std::string> extract_urls(std::string_view text);

/// Replaces each URL with a single space.
std::string strip_urls(std::string_view text);

/// Shortens each run of three or more identical code points to two.
std::string collapse_repeats(std::string_view token);

/// Steps 2-7 of preprocessing on already entity-free text: punctuation and
/// symbols to spaces, lowercase, split, collapse repeats, drop tokens
/// shorter than three code points, drop stopwords.
std::vector<std::string> normalize_tokens(std::string_view text, const Stopwords& stopwords);

/// Full preprocessing chain. Mentions, hashtags and URLs are extracted from
/// the raw text first and their spans blanked before normalization.
CleanTweet preprocess(const TweetRecord& record, const Stopwords& stopwords);
CleanTweet preprocess_text(std::string_view record_id, std::string_view text,
                           const Stopwords& stopwords);

}  // namespace tweetlex
