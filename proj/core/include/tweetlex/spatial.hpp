#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tweetlex/tagger.hpp"
#include "tweetlex/temporal.hpp"

namespace tweetlex {

/// Reporting regions: Indian states and union territories (with Delhi-NCR
/// as one grouping), India without a state, and abroad.
class Region {
 public:
  static const Region india_unspecified;
  static const Region foreign;

  static std::optional<Region> parse(std::string_view name);
  static std::span<const std::string_view> all_names();
  static std::size_t count();

  std::string_view name() const;
  std::uint8_t id() const { return id_; }
  bool is_state() const;

  friend constexpr bool operator==(Region, Region) = default;
  friend constexpr auto operator<=>(Region, Region) = default;

 private:
  constexpr explicit Region(std::uint8_t id) : id_(id) {}
  std::uint8_t id_;
};

struct GazetteerRule {
  std::string pattern;  // lowercase, trimmed
  Region region;
  int priority;
  bool substring;       // pattern written with a leading '~'
  std::size_t line;
};

/// Ordered pattern -> region rules. File format, one rule per line:
///
///     pattern,region,priority
///
/// Rules are tried by ascending priority, then file order, and the first
/// match wins. A pattern matches when it occurs in the normalized location
/// bounded by non-alphanumeric characters or the string ends; a pattern
/// prefixed with '~' matches as a plain substring.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(std::vector<GazetteerRule> rules);

  static Gazetteer load(const std::filesystem::path& path);
  static Gazetteer parse(std::istream& in, std::string_view source_name = "<stream>");

  const std::vector<GazetteerRule>& rules() const { return rules_; }

  /// nullopt means UNKNOWN.
  std::optional<Region> resolve(std::optional<std::string_view> raw) const;

  /// Index of the first rule matching an already-normalized string.
  std::optional<std::size_t> first_match(std::string_view normalized) const;

 private:
  std::vector<GazetteerRule> rules_;
};

/// Lowercase and trim; the form patterns are matched against.
std::string normalize_location(std::string_view raw);

bool rule_matches(const GazetteerRule& rule, std::string_view normalized);

std::optional<Region> resolve_location(std::optional<std::string_view> raw, const Gazetteer& gz);

class RegionAggregate {
 public:
  void add(Region region, const Labels& labels);

  std::uint64_t tweets(Region region) const;
  const LabelTally& tally(Region region) const;
  std::uint64_t total() const;
  std::uint64_t india_total() const;

  RegionAggregate& operator+=(const RegionAggregate& other);
  friend bool operator==(const RegionAggregate&, const RegionAggregate&) = default;

 private:
  std::vector<LabelTally> by_region_ = std::vector<LabelTally>(Region::count());
};

RegionAggregate aggregate_by_region(std::span<const std::pair<TagResult, Region>> results);

/// One row of the regions report. States come first in rank order
/// (tweets descending, name ascending), followed by the INDIA_UNSPECIFIED,
/// INDIA_TOTAL, FOREIGN and TOTAL rows.
struct RegionRow {
  std::string name;
  std::uint64_t tweets = 0;
  LabelTally tally;
  double share = 0.0;
  std::optional<double> cumulative_share;  // state rows only
};

std::vector<RegionRow> region_report(const RegionAggregate& agg);

}  // namespace tweetlex
