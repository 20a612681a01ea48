#include "tweetlex/report.hpp"

#include <chrono>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "tweetlex/csv.hpp"
#include "tweetlex/errors.hpp"
#include "tweetlex/reference.hpp"

namespace tweetlex {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<Label, 8> kEmotionColumns = {Label::joy,      Label::trust, Label::anticipation,
                                                  Label::surprise, Label::fear,  Label::sadness,
                                                  Label::anger,    Label::disgust};

std::string share_text(double v) { return fmt::format("{:.6f}", v); }

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

ordered_json frequency_summary(const FrequencyTable& table, std::size_t top) {
  std::uint64_t subtotal = 0;
  for (const auto& [key, n] : top_n(table, top)) subtotal += n;
  ordered_json j;
  j["total_occurrences"] = table.total_occurrences();
  j["distinct_keys"] = table.distinct_keys();
  j["top_n"] = top;
  j["top_n_subtotal"] = subtotal;
  return j;
}

Resources load_resources(const RunConfig& config, bool need_lexicon) {
  Resources res;
  if (need_lexicon || !config.lexicon.empty()) res.lexicon = Lexicon::load(config.lexicon);
  if (!config.stopwords.empty()) res.stopwords = Stopwords::load(config.stopwords);
  if (!config.gazetteer.empty()) res.gazetteer = Gazetteer::load(config.gazetteer);
  return res;
}

IngestOptions ingest_options(const RunConfig& config) {
  IngestOptions opts;
  opts.format = config.format;
  opts.default_offset = config.default_tz;
  opts.analysis_offset = config.default_tz;
  opts.from = config.from;
  opts.to = config.to;
  return opts;
}

Analysis run_pipeline(const RunConfig& config, const Resources& res, AnalyzeOptions options) {
  options.analysis_offset = config.default_tz;
  options.threads = std::max(1u, config.threads);

  auto reader = RecordReader::open(config.input, ingest_options(config));
  if (config.on_diagnostic) reader->set_diagnostic_sink(config.on_diagnostic);

  if (!config.oracle) return analyze_stream(*reader, res, options);

  std::vector<TweetRecord> records;
  while (auto rec = reader->next()) records.push_back(std::move(*rec));
  reference::ReferenceResources ref{
      config.lexicon.empty() ? reference::RowLexicon{} : reference::RowLexicon::load(config.lexicon),
      config.stopwords.empty() ? std::vector<std::string>{}
                               : reference::load_stopwords(config.stopwords),
      res.gazetteer.rules()};
  auto analysis = reference::analyze(records, ref, options);
  const auto& tally = reader->tally();
  analysis.summary.records_read = tally.lines;
  analysis.summary.records_rejected = tally.skipped();
  for (const auto& [reason, n] : tally.skipped_by_reason) {
    analysis.summary.rejected_by_reason[reason] = n;
  }
  return analysis;
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
}

}  // namespace

std::string daily_csv(const DayBuckets& days) {
  std::string out = "date,channel,label,count\n";
  for (const auto& [day, tally] : days.days()) {
    const auto date = format_date(std::chrono::year_month_day{day});
    for (auto ch : kChannels) {
      for (auto l : labels_of(ch)) {
        out += fmt::format("{},{},{},{}\n", date, name_of(ch), name_of(l), tally.count(ch, l));
      }
    }
  }
  return out;
}

std::string hourly_csv(const HourBuckets& hours) {
  std::string out = "slot,count\n";
  if (hours.total() == 0) return out;
  for (int i = 0; i < HourBuckets::kSlots; ++i) out += fmt::format("{},{}\n", i, hours.slot(i));
  return out;
}

std::string frequency_csv(const FrequencyTable& table) {
  std::string out = "key,count\n";
  for (const auto& [key, n] : ranked(table)) out += fmt::format("{},{}\n", csv::escape(key), n);
  return out;
}

std::string cloud_json(const FrequencyTable& table, std::size_t n) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, count] : top_n(table, n)) j[key] = count;
  return j.dump(2) + "\n";
}

std::string regions_csv(const RegionAggregate& regions) {
  std::string out = "region,tweets,positive,negative,neutral";
  for (auto l : kEmotionColumns) out += fmt::format(",{}", name_of(l));
  out += ",share,cumulative_share\n";

  for (const auto& row : region_report(regions)) {
    const auto& t = row.tally;
    out += fmt::format("{},{},{},{},{}", csv::escape(row.name), row.tweets,
                       t.count(Channel::sentiment, Label::positive),
                       t.count(Channel::sentiment, Label::negative),
                       t.count(Channel::sentiment, Label::neutral));
    for (auto l : kEmotionColumns) out += fmt::format(",{}", t.count(Channel::emotion, l));
    out += fmt::format(",{},{}\n", share_text(row.share),
                       row.cumulative_share ? share_text(*row.cumulative_share) : "");
  }
  return out;
}

std::string tag_json_line(const TagResult& tag) {
  ordered_json j;
  j["id"] = tag.record_id;
  ordered_json counts = ordered_json::object();
  for (auto c : kAllCategories) counts[std::string(name_of(c))] = tag.counts[c];
  j["counts"] = std::move(counts);
  j["sentiment"] = name_of(tag.labels.sentiment);
  j["emotion"] = name_of(tag.labels.emotion);
  j["overall"] = name_of(tag.labels.overall);
  j["tied"] = tag.labels.tied;
  return j.dump() + "\n";
}

std::string summary_json(const Analysis& analysis, std::size_t top_n_size) {
  const auto& s = analysis.summary;
  ordered_json j;
  j["records_read"] = s.records_read;
  j["records_rejected"] = s.records_rejected;
  ordered_json reasons = ordered_json::object();
  for (const auto& [reason, n] : s.rejected_by_reason) reasons[reason] = n;
  j["rejected_by_reason"] = std::move(reasons);
  j["blanks_dropped"] = s.blanks_dropped;
  j["tweets_tagged"] = s.tweets_tagged;
  if (s.mention_filter) {
    j["mention"] = *s.mention_filter;
    j["matched_tweets"] = s.matched_tweets;
  }
  ordered_json neutral;
  for (auto ch : kChannels) {
    neutral[std::string(name_of(ch))] = s.neutral_by_channel[static_cast<std::size_t>(ch)];
  }
  j["neutral"] = std::move(neutral);
  j["tie_count"] = s.tie_count;
  j["non_latin_tokens"] = s.non_latin_tokens;
  j["days"] = analysis.daily.days().size();
  const auto peak = peak_slot(analysis.hourly);
  j["peak_slot"] = peak ? ordered_json(*peak) : ordered_json(nullptr);
  j["locations"] = {
      {"states", s.located_states},
      {"india_unspecified", s.located_india_unspecified},
      {"foreign", s.located_foreign},
      {"unknown", s.location_unknown},
  };
  j["mentions"] = frequency_summary(analysis.mentions, top_n_size);
  j["hashtags"] = frequency_summary(analysis.hashtags, top_n_size);
  return j.dump(2) + "\n";
}

RunSummary run_analyze(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto res = load_resources(config, true);

  AnalyzeOptions options;
  options.keep_tags = config.emit_tags;
  auto analysis = run_pipeline(config, res, options);

  // Render everything before touching the output directory.
  const std::vector<std::pair<std::string, std::string>> files = {
      {"daily.csv", daily_csv(analysis.daily)},
      {"hourly.csv", hourly_csv(analysis.hourly)},
      {"mentions.csv", frequency_csv(analysis.mentions)},
      {"hashtags.csv", frequency_csv(analysis.hashtags)},
      {"mentions_cloud.json", cloud_json(analysis.mentions, config.top_n)},
      {"hashtags_cloud.json", cloud_json(analysis.hashtags, config.top_n)},
      {"regions.csv", regions_csv(analysis.regions)},
      {"summary.json", summary_json(analysis, config.top_n)},
  };
  std::string tags;
  if (config.emit_tags) {
    for (const auto& t : analysis.tags) tags += tag_json_line(t);
  }

  prepare_out_dir(config.out_dir);
  for (const auto& [name, contents] : files) write_file(config.out_dir / name, contents);
  if (config.emit_tags) write_file(config.out_dir / "tags.jsonl", tags);

  analysis.summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return analysis.summary;
}

RunSummary run_subcorpus(const RunConfig& config, std::string_view user) {
  const auto start = std::chrono::steady_clock::now();
  const auto key = mention_key(user);
  if (key.empty()) throw LoadError("--mention must name a user");
  const auto res = load_resources(config, true);

  AnalyzeOptions options;
  options.mention_filter = key;
  auto analysis = run_pipeline(config, res, options);

  const auto daily = daily_csv(analysis.daily);
  const auto summary = summary_json(analysis, config.top_n);
  prepare_out_dir(config.out_dir);
  write_file(config.out_dir / "daily.csv", daily);
  write_file(config.out_dir / "summary.json", summary);

  analysis.summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return analysis.summary;
}

std::vector<RankedEntry> run_top(const RunConfig& config, EntityKind what, std::size_t n) {
  const auto res = load_resources(config, false);
  const auto analysis = run_pipeline(config, res, AnalyzeOptions{});
  return top_n(what == EntityKind::mentions ? analysis.mentions : analysis.hashtags, n);
}

}  // namespace tweetlex
