#include "tweetlex/pipeline.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace tweetlex {

namespace {

void aggregate(Analysis& part, const TweetRecord& rec, const CleanTweet& clean,
               const TagResult& tag, const Resources& res, const AnalyzeOptions& options) {
  auto& s = part.summary;
  ++s.matched_tweets;
  for (auto ch : kChannels) {
    if (tag.labels.of(ch) == Label::neutral) ++s.neutral_by_channel[static_cast<std::size_t>(ch)];
  }
  if (tag.labels.tied) ++s.tie_count;

  part.daily.add(rec.created_at, options.analysis_offset, tag.labels);
  part.hourly.add(rec.created_at, options.analysis_offset);
  add_mentions(part.mentions, clean);
  add_hashtags(part.hashtags, clean);

  std::optional<std::string_view> location;
  if (rec.user_location) location = *rec.user_location;
  const auto region = res.gazetteer.resolve(location);
  if (!region) {
    ++s.location_unknown;
    return;
  }
  if (*region == Region::foreign) {
    ++s.located_foreign;
  } else if (*region == Region::india_unspecified) {
    ++s.located_india_unspecified;
  } else {
    ++s.located_states;
  }
  part.regions.add(*region, tag.labels);
}

void process_slice(std::span<const TweetRecord> slice, const Resources& res,
                   const AnalyzeOptions& options, Analysis& part,
                   std::span<std::optional<TagResult>> tag_slots) {
  for (std::size_t i = 0; i < slice.size(); ++i) {
    const auto& rec = slice[i];
    const auto clean = preprocess(rec, res.stopwords);
    if (clean.is_blank) {
      ++part.summary.blanks_dropped;
      continue;
    }
    ++part.summary.tweets_tagged;
    part.summary.non_latin_tokens += clean.non_latin_tokens;
    auto tag = tag_tweet(clean, res.lexicon);
    if (options.mention_filter && !mentions_user(clean, *options.mention_filter)) continue;
    aggregate(part, rec, clean, tag, res, options);
    if (options.keep_tags) tag_slots[i] = std::move(tag);
  }
}

}  // namespace

void merge_into(Analysis& into, const Analysis& part) {
  auto& a = into.summary;
  const auto& b = part.summary;
  a.records_read += b.records_read;
  a.records_rejected += b.records_rejected;
  for (const auto& [reason, n] : b.rejected_by_reason) a.rejected_by_reason[reason] += n;
  a.blanks_dropped += b.blanks_dropped;
  a.tweets_tagged += b.tweets_tagged;
  for (std::size_t i = 0; i < a.neutral_by_channel.size(); ++i) {
    a.neutral_by_channel[i] += b.neutral_by_channel[i];
  }
  a.tie_count += b.tie_count;
  a.non_latin_tokens += b.non_latin_tokens;
  a.located_states += b.located_states;
  a.located_india_unspecified += b.located_india_unspecified;
  a.located_foreign += b.located_foreign;
  a.location_unknown += b.location_unknown;
  a.matched_tweets += b.matched_tweets;

  into.daily += part.daily;
  into.hourly += part.hourly;
  into.mentions += part.mentions;
  into.hashtags += part.hashtags;
  into.regions += part.regions;
  into.tags.insert(into.tags.end(), part.tags.begin(), part.tags.end());
}

Analysis analyze_records(std::span<const TweetRecord> records, const Resources& res,
                         const AnalyzeOptions& options) {
  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(records.size(), 1));
  std::vector<Analysis> parts(workers);
  std::vector<std::optional<TagResult>> tag_slots(options.keep_tags ? records.size() : 0);

  const auto slice_of = [&](std::size_t w) {
    const auto begin = records.size() * w / workers;
    const auto end = records.size() * (w + 1) / workers;
    return std::pair{begin, end};
  };
  const auto run = [&](std::size_t w) {
    const auto [begin, end] = slice_of(w);
    std::span<std::optional<TagResult>> slots;
    if (options.keep_tags) slots = std::span(tag_slots).subspan(begin, end - begin);
    process_slice(records.subspan(begin, end - begin), res, options, parts[w], slots);
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  Analysis result;
  for (const auto& part : parts) merge_into(result, part);
  for (auto& slot : tag_slots) {
    if (slot) result.tags.push_back(std::move(*slot));
  }
  result.summary.records_read = records.size();
  result.summary.mention_filter = options.mention_filter;
  return result;
}

Analysis analyze_stream(RecordReader& reader, const Resources& res, const AnalyzeOptions& options) {
  Analysis total;
  std::vector<TweetRecord> batch;
  const auto batch_size = std::max<std::size_t>(options.batch_size, 1);
  batch.reserve(batch_size);
  for (;;) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto rec = reader.next();
      if (!rec) break;
      batch.push_back(std::move(*rec));
    }
    if (batch.empty()) break;
    merge_into(total, analyze_records(batch, res, options));
  }
  const auto& tally = reader.tally();
  total.summary.records_read = tally.lines;
  total.summary.records_rejected = tally.skipped();
  for (const auto& [reason, n] : tally.skipped_by_reason) total.summary.rejected_by_reason[reason] = n;
  total.summary.mention_filter = options.mention_filter;
  return total;
}

}  // namespace tweetlex
