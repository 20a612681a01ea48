#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetlex/pipeline.hpp"

namespace tweetlex {

// Renderers. Each returns the complete file contents, header included.
std::string daily_csv(const DayBuckets& days);      // date,channel,label,count
std::string hourly_csv(const HourBuckets& hours);   // slot,count
std::string frequency_csv(const FrequencyTable& table);  // key,count
std::string cloud_json(const FrequencyTable& table, std::size_t n);
std::string regions_csv(const RegionAggregate& regions);
std::string tag_json_line(const TagResult& tag);
std::string summary_json(const Analysis& analysis, std::size_t top_n);

struct RunConfig {
  std::filesystem::path input = "-";
  InputFormat format = InputFormat::jsonl;
  std::filesystem::path lexicon;
  std::filesystem::path stopwords;  // empty: no stopwords
  std::filesystem::path gazetteer;  // empty: every location is UNKNOWN
  std::filesystem::path out_dir;
  UtcOffset default_tz = kIndiaStandardTime;
  std::optional<std::chrono::year_month_day> from;
  std::optional<std::chrono::year_month_day> to;
  bool emit_tags = false;
  bool oracle = false;
  unsigned threads = 1;
  std::size_t top_n = 40;
  std::function<void(const Diagnostic&)> on_diagnostic;
};

/// Loads resources, runs the pipeline and writes daily.csv, hourly.csv,
/// mentions.csv, hashtags.csv, mentions_cloud.json, hashtags_cloud.json,
/// regions.csv, summary.json and, with emit_tags, tags.jsonl. Loader
/// errors are raised before any file is written.
RunSummary run_analyze(const RunConfig& config);

/// Daily series (daily.csv) and summary.json restricted to tweets that
/// mention `user`.
RunSummary run_subcorpus(const RunConfig& config, std::string_view user);

enum class EntityKind { mentions, hashtags };

std::vector<RankedEntry> run_top(const RunConfig& config, EntityKind what, std::size_t n);

}  // namespace tweetlex
