#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <map>
#include <utility>
#include <vector>

#include "tweetlex/pipeline.hpp"

// Naive single-threaded reimplementation of the analysis path, used by the
// --oracle mode for differential runs. Shares only ingest and the report
// writers with the fast path.
namespace tweetlex::reference {

/// Lexicon kept as its raw (word, category, flag) rows. A lookup gathers
/// every row for the word and ORs the flag-1 categories. Assumes the file
/// already passed Lexicon::load validation.
class RowLexicon {
 public:
  static RowLexicon load(const std::filesystem::path& path);
  static RowLexicon parse(std::string_view contents);

  CategorySet categories_of(std::string_view word) const;

 private:
  std::multimap<std::string, std::pair<Category, bool>, std::less<>> rows_;
};

/// Step-by-step preprocessing on a code-point string, one full pass per
/// step in the documented order.
CleanTweet preprocess(const TweetRecord& record, const std::vector<std::string>& stopwords);

Labels label(const CategoryCounts& counts);

/// Loads a stopword file as a plain list.
std::vector<std::string> load_stopwords(const std::filesystem::path& path);

std::optional<Region> resolve(std::optional<std::string_view> raw,
                              const std::vector<GazetteerRule>& rules);

struct ReferenceResources {
  RowLexicon lexicon;
  std::vector<std::string> stopwords;
  std::vector<GazetteerRule> rules;
};

Analysis analyze(std::span<const TweetRecord> records, const ReferenceResources& res,
                 const AnalyzeOptions& options);

}  // namespace tweetlex::reference
