#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "tweetlex/category.hpp"
#include "tweetlex/tagger.hpp"
#include "tweetlex/timestamp.hpp"

namespace tweetlex {

/// Per-channel label counts for a group of tweets. Every tweet adds one to
/// exactly one label in each channel.
class LabelTally {
 public:
  void add(const Labels& labels);

  std::uint64_t count(Channel ch, Label l) const {
    return counts_[static_cast<std::size_t>(ch)][index_of(l)];
  }
  /// Number of tweets added.
  std::uint64_t tweets() const { return tweets_; }

  LabelTally& operator+=(const LabelTally& other);
  friend bool operator==(const LabelTally&, const LabelTally&) = default;

 private:
  std::array<std::array<std::uint64_t, kLabelCount>, 3> counts_{};
  std::uint64_t tweets_ = 0;
};

class DayBuckets {
 public:
  using Map = std::map<std::chrono::sys_days, LabelTally>;

  void add(std::chrono::sys_days day, const Labels& labels) { days_[day].add(labels); }
  void add(Instant at, UtcOffset zone, const Labels& labels);

  const Map& days() const { return days_; }
  std::uint64_t total() const;
  bool empty() const { return days_.empty(); }

  DayBuckets& operator+=(const DayBuckets& other);
  friend bool operator==(const DayBuckets&, const DayBuckets&) = default;

 private:
  Map days_;
};

class HourBuckets {
 public:
  static constexpr int kSlots = 24;

  void add_to_slot(int slot, std::uint64_t n = 1) { slots_.at(static_cast<std::size_t>(slot)) += n; }
  void add(Instant at, UtcOffset zone);

  std::uint64_t slot(int i) const { return slots_.at(static_cast<std::size_t>(i)); }
  const std::array<std::uint64_t, kSlots>& slots() const { return slots_; }
  std::uint64_t total() const;

  HourBuckets& operator+=(const HourBuckets& other);
  friend bool operator==(const HourBuckets&, const HourBuckets&) = default;

 private:
  std::array<std::uint64_t, kSlots> slots_{};
};

struct TimedResult {
  TagResult result;
  Instant at;
};

DayBuckets bucket_by_day(std::span<const TimedResult> results, UtcOffset zone);
HourBuckets bucket_by_hour(std::span<const TimedResult> results, UtcOffset zone);

/// Earliest slot holding the maximum count; nullopt when every slot is 0.
std::optional<int> peak_slot(const HourBuckets& buckets);

}  // namespace tweetlex
