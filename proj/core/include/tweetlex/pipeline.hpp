#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tweetlex/entities.hpp"
#include "tweetlex/ingest.hpp"
#include "tweetlex/lexicon.hpp"
#include "tweetlex/preprocess.hpp"
#include "tweetlex/spatial.hpp"
#include "tweetlex/tagger.hpp"
#include "tweetlex/temporal.hpp"

namespace tweetlex {

struct Resources {
  Lexicon lexicon;
  Stopwords stopwords;
  Gazetteer gazetteer;
};

struct AnalyzeOptions {
  UtcOffset analysis_offset = kIndiaStandardTime;
  unsigned threads = 1;
  bool keep_tags = false;
  // When set, only tweets mentioning this (normalized) user are aggregated.
  std::optional<std::string> mention_filter;
  std::size_t batch_size = 16384;
};

struct RunSummary {
  std::uint64_t records_read = 0;
  std::uint64_t records_rejected = 0;
  std::map<std::string, std::uint64_t> rejected_by_reason;
  std::uint64_t blanks_dropped = 0;
  std::uint64_t tweets_tagged = 0;
  std::array<std::uint64_t, 3> neutral_by_channel{};  // indexed by Channel
  std::uint64_t tie_count = 0;
  std::uint64_t non_latin_tokens = 0;

  std::uint64_t located_states = 0;
  std::uint64_t located_india_unspecified = 0;
  std::uint64_t located_foreign = 0;
  std::uint64_t location_unknown = 0;

  std::optional<std::string> mention_filter;
  std::uint64_t matched_tweets = 0;  // tweets aggregated (== tagged without a filter)

  double elapsed_seconds = 0.0;  // never serialized

  bool accounting_holds() const {
    return records_read == records_rejected + blanks_dropped + tweets_tagged;
  }
};

struct Analysis {
  RunSummary summary;
  DayBuckets daily;
  HourBuckets hourly;
  FrequencyTable mentions;
  FrequencyTable hashtags;
  RegionAggregate regions;
  std::vector<TagResult> tags;  // input order; filled when keep_tags
};

/// Merges the aggregates and counters of `part` into `into`.
void merge_into(Analysis& into, const Analysis& part);

/// Parallel tagging engine. Records are processed in input-order batches;
/// each worker owns a contiguous slice and private aggregates that are
/// merged in worker order, so results do not depend on the thread count.
Analysis analyze_records(std::span<const TweetRecord> records, const Resources& res,
                         const AnalyzeOptions& options);

/// Streams the reader in batches and folds in its ingest tally.
Analysis analyze_stream(RecordReader& reader, const Resources& res, const AnalyzeOptions& options);

}  // namespace tweetlex
