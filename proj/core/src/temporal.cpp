#include "tweetlex/temporal.hpp"

#include <numeric>

namespace tweetlex {

void LabelTally::add(const Labels& labels) {
  for (auto ch : kChannels) ++counts_[static_cast<std::size_t>(ch)][index_of(labels.of(ch))];
  ++tweets_;
}

LabelTally& LabelTally::operator+=(const LabelTally& other) {
  for (std::size_t ch = 0; ch < counts_.size(); ++ch) {
    for (std::size_t l = 0; l < kLabelCount; ++l) counts_[ch][l] += other.counts_[ch][l];
  }
  tweets_ += other.tweets_;
  return *this;
}

void DayBuckets::add(Instant at, UtcOffset zone, const Labels& labels) {
  add(std::chrono::sys_days{to_local(at, zone).date}, labels);
}

std::uint64_t DayBuckets::total() const {
  std::uint64_t n = 0;
  for (const auto& [day, tally] : days_) n += tally.tweets();
  return n;
}

DayBuckets& DayBuckets::operator+=(const DayBuckets& other) {
  for (const auto& [day, tally] : other.days_) days_[day] += tally;
  return *this;
}

void HourBuckets::add(Instant at, UtcOffset zone) { add_to_slot(to_local(at, zone).hour); }

std::uint64_t HourBuckets::total() const {
  return std::accumulate(slots_.begin(), slots_.end(), std::uint64_t{0});
}

HourBuckets& HourBuckets::operator+=(const HourBuckets& other) {
  for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i] += other.slots_[i];
  return *this;
}

DayBuckets bucket_by_day(std::span<const TimedResult> results, UtcOffset zone) {
  DayBuckets buckets;
  for (const auto& r : results) buckets.add(r.at, zone, r.result.labels);
  return buckets;
}

HourBuckets bucket_by_hour(std::span<const TimedResult> results, UtcOffset zone) {
  HourBuckets buckets;
  for (const auto& r : results) buckets.add(r.at, zone);
  return buckets;
}

std::optional<int> peak_slot(const HourBuckets& buckets) {
  std::optional<int> peak;
  std::uint64_t best = 0;
  for (int i = 0; i < HourBuckets::kSlots; ++i) {
    if (buckets.slot(i) > best) {
      best = buckets.slot(i);
      peak = i;
    }
  }
  return peak;
}

}  // namespace tweetlex
