#include "tweetlex/spatial.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>

#include <fmt/format.h>

#include "tweetlex/csv.hpp"
#include "tweetlex/errors.hpp"
#include "tweetlex/text.hpp"

namespace tweetlex {

namespace {

constexpr std::array<std::string_view, 38> kRegionNames = {
    "INDIA_UNSPECIFIED",
    "FOREIGN",
    "Delhi-NCR",
    "Maharashtra",
    "Karnataka",
    "Gujarat",
    "Tamil Nadu",
    "Rajasthan",
    "Uttar Pradesh",
    "Madhya Pradesh",
    "Haryana",
    "Punjab",
    "West Bengal",
    "Chhattisgarh",
    "Bihar",
    "Jammu & Kashmir",
    "Uttarakhand",
    "Odisha",
    "Jharkhand",
    "Kerala",
    "Goa",
    "Assam",
    "Telangana",
    "Andhra Pradesh",
    "Himachal Pradesh",
    "Arunachal Pradesh",
    "Manipur",
    "Meghalaya",
    "Mizoram",
    "Nagaland",
    "Sikkim",
    "Tripura",
    "Chandigarh",
    "Puducherry",
    "Ladakh",
    "Andaman & Nicobar Islands",
    "Dadra & Nagar Haveli and Daman & Diu",
    "Lakshadweep",
};

bool alnum_before(std::string_view s, std::size_t pos) {
  if (pos == 0) return false;
  std::size_t start = pos - 1;
  while (start > 0 && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) --start;
  return text::is_alnum(text::decode(s, start).cp);
}

bool alnum_at(std::string_view s, std::size_t pos) {
  return pos < s.size() && text::is_alnum(text::decode(s, pos).cp);
}

}  // namespace

const Region Region::india_unspecified{0};
const Region Region::foreign{1};

std::optional<Region> Region::parse(std::string_view name) {
  const auto wanted = text::to_lower(text::trim(name));
  for (std::size_t i = 0; i < kRegionNames.size(); ++i) {
    if (text::to_lower(kRegionNames[i]) == wanted) return Region{static_cast<std::uint8_t>(i)};
  }
  return std::nullopt;
}

std::span<const std::string_view> Region::all_names() { return kRegionNames; }
std::size_t Region::count() { return kRegionNames.size(); }
std::string_view Region::name() const { return kRegionNames[id_]; }
bool Region::is_state() const { return id_ >= 2; }

std::string normalize_location(std::string_view raw) {
  const auto lowered = text::to_lower(text::trim(raw));
  // Collapse internal whitespace runs so multi-word patterns line up.
  std::string out;
  out.reserve(lowered.size());
  bool in_space = false;
  for (std::size_t i = 0; i < lowered.size();) {
    const auto d = text::decode(lowered, i);
    if (text::is_space(d.cp)) {
      in_space = true;
    } else {
      if (in_space) out.push_back(' ');
      in_space = false;
      out.append(lowered, i, d.length);
    }
    i += d.length;
  }
  return out;
}

bool rule_matches(const GazetteerRule& rule, std::string_view normalized) {
  if (rule.substring) return normalized.find(rule.pattern) != std::string_view::npos;
  for (auto pos = normalized.find(rule.pattern); pos != std::string_view::npos;
       pos = normalized.find(rule.pattern, pos + 1)) {
    if (!alnum_before(normalized, pos) && !alnum_at(normalized, pos + rule.pattern.size())) {
      return true;
    }
  }
  return false;
}

Gazetteer::Gazetteer(std::vector<GazetteerRule> rules) : rules_(std::move(rules)) {
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const GazetteerRule& a, const GazetteerRule& b) {
                     return a.priority < b.priority;
                   });
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open gazetteer '{}'", path.string()));
  return parse(in, path.string());
}

Gazetteer Gazetteer::parse(std::istream& in, std::string_view source_name) {
  std::vector<GazetteerRule> rules;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;

  auto fail = [&](std::string_view what) {
    return LoadError(fmt::format("{}:{}: {}", source_name, line_no, what));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    const auto row = csv::parse_line(line);
    if (!row.well_formed || row.fields.size() != 3) {
      throw fail("expected pattern,region,priority");
    }
    if (first_row) {
      first_row = false;
      if (text::trim(row.fields[0]) == "pattern" && text::trim(row.fields[1]) == "region") {
        continue;
      }
    }

    std::string pattern = normalize_location(row.fields[0]);
    bool substring = false;
    if (!pattern.empty() && pattern.front() == '~') {
      substring = true;
      pattern = normalize_location(std::string_view(pattern).substr(1));
    }
    if (pattern.empty()) throw fail("empty pattern");

    const auto region = Region::parse(row.fields[1]);
    if (!region) throw fail(fmt::format("unknown region '{}'", text::trim(row.fields[1])));

    const auto prio_text = text::trim(row.fields[2]);
    int priority = 0;
    const auto [end, ec] =
        std::from_chars(prio_text.data(), prio_text.data() + prio_text.size(), priority);
    if (ec != std::errc{} || end != prio_text.data() + prio_text.size()) {
      throw fail(fmt::format("invalid priority '{}'", prio_text));
    }
    rules.push_back({std::move(pattern), *region, priority, substring, line_no});
  }
  if (in.bad()) throw IoError(fmt::format("error reading gazetteer '{}'", source_name));
  return Gazetteer(std::move(rules));
}

std::optional<std::size_t> Gazetteer::first_match(std::string_view normalized) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rule_matches(rules_[i], normalized)) return i;
  }
  return std::nullopt;
}

std::optional<Region> Gazetteer::resolve(std::optional<std::string_view> raw) const {
  if (!raw) return std::nullopt;
  const auto normalized = normalize_location(*raw);
  if (normalized.empty()) return std::nullopt;
  const auto idx = first_match(normalized);
  if (!idx) return std::nullopt;
  return rules_[*idx].region;
}

std::optional<Region> resolve_location(std::optional<std::string_view> raw, const Gazetteer& gz) {
  return gz.resolve(raw);
}

void RegionAggregate::add(Region region, const Labels& labels) {
  by_region_[region.id()].add(labels);
}

std::uint64_t RegionAggregate::tweets(Region region) const {
  return by_region_[region.id()].tweets();
}

const LabelTally& RegionAggregate::tally(Region region) const { return by_region_[region.id()]; }

std::uint64_t RegionAggregate::total() const {
  std::uint64_t n = 0;
  for (const auto& t : by_region_) n += t.tweets();
  return n;
}

std::uint64_t RegionAggregate::india_total() const {
  return total() - tweets(Region::foreign);
}

RegionAggregate& RegionAggregate::operator+=(const RegionAggregate& other) {
  for (std::size_t i = 0; i < by_region_.size(); ++i) by_region_[i] += other.by_region_[i];
  return *this;
}

RegionAggregate aggregate_by_region(std::span<const std::pair<TagResult, Region>> results) {
  RegionAggregate agg;
  for (const auto& [tag, region] : results) agg.add(region, tag.labels);
  return agg;
}

std::vector<RegionRow> region_report(const RegionAggregate& agg) {
  std::vector<RegionRow> rows;
  const auto total = agg.total();
  if (total == 0) return rows;
  const auto share = [&](std::uint64_t n) { return static_cast<double>(n) / static_cast<double>(total); };

  for (std::size_t i = 2; i < Region::count(); ++i) {
    const auto region = *Region::parse(kRegionNames[i]);
    if (agg.tweets(region) == 0) continue;
    rows.push_back({std::string(region.name()), agg.tweets(region), agg.tally(region), 0.0, {}});
  }
  std::sort(rows.begin(), rows.end(), [](const RegionRow& a, const RegionRow& b) {
    if (a.tweets != b.tweets) return a.tweets > b.tweets;
    return a.name < b.name;
  });
  std::uint64_t running = 0;
  for (auto& row : rows) {
    running += row.tweets;
    row.share = share(row.tweets);
    row.cumulative_share = share(running);
  }

  LabelTally india = agg.tally(Region::india_unspecified);
  for (const auto& row : rows) india += row.tally;
  LabelTally everything = india;
  everything += agg.tally(Region::foreign);

  const auto unspecified = agg.tweets(Region::india_unspecified);
  const auto foreign = agg.tweets(Region::foreign);
  rows.push_back({"INDIA_UNSPECIFIED", unspecified, agg.tally(Region::india_unspecified),
                  share(unspecified), {}});
  rows.push_back({"INDIA_TOTAL", agg.india_total(), india, share(agg.india_total()), {}});
  rows.push_back({"FOREIGN", foreign, agg.tally(Region::foreign), share(foreign), {}});
  rows.push_back({"TOTAL", total, everything, 1.0, {}});
  return rows;
}

}  // namespace tweetlex
