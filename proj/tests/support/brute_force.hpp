#pragma once

// Test-only oracle: derives category counts and labels for a token list by
// scanning the raw lexicon file text once per token. Shares no code with
// the tagger beyond the Category enum.

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tweetlex/category.hpp"
#include "tweetlex/tagger.hpp"

namespace tweetlex::support {

inline std::string lower_ascii(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// Per-category counts, indexed by the category's EmoLex name.
struct BruteCounts {
  std::vector<std::pair<std::string, int>> by_name = {
      {"positive", 0}, {"negative", 0}, {"joy", 0},     {"trust", 0},   {"anticipation", 0},
      {"surprise", 0}, {"fear", 0},     {"sadness", 0}, {"anger", 0},   {"disgust", 0}};

  int& at(const std::string& name) {
    for (auto& [n, v] : by_name) {
      if (n == name) return v;
    }
    throw std::logic_error("unknown category " + name);
  }
  int get(const std::string& name) const {
    for (const auto& [n, v] : by_name) {
      if (n == name) return v;
    }
    return -1;
  }
};

inline BruteCounts brute_force_counts(const std::string& lexicon_text,
                                      const std::vector<std::string>& tokens) {
  BruteCounts counts;
  for (const auto& token : tokens) {
    const auto wanted = lower_ascii(token);
    std::istringstream lines(lexicon_text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') continue;
      const auto t1 = line.find('\t');
      const auto t2 = line.find('\t', t1 + 1);
      if (lower_ascii(line.substr(0, t1)) != wanted) continue;
      if (line.substr(t2 + 1, 1) == "1") ++counts.at(line.substr(t1 + 1, t2 - t1 - 1));
    }
  }
  return counts;
}

struct BruteLabels {
  std::string sentiment, emotion, overall;
  bool tied = false;
};

inline BruteLabels brute_force_labels(const BruteCounts& counts) {
  BruteLabels out;
  auto pick = [&](const std::vector<std::string>& order) {
    int best = 0;
    for (const auto& name : order) best = std::max(best, counts.get(name));
    if (best == 0) return std::string("neutral");
    int holders = 0;
    std::string winner;
    for (const auto& name : order) {
      if (counts.get(name) == best) {
        if (holders == 0) winner = name;
        ++holders;
      }
    }
    if (holders > 1) out.tied = true;
    return winner;
  };
  const std::vector<std::string> emotions = {"joy",  "trust",   "anticipation", "surprise",
                                             "fear", "sadness", "anger",        "disgust"};
  std::vector<std::string> all = {"positive", "negative"};
  all.insert(all.end(), emotions.begin(), emotions.end());
  out.sentiment = pick({"positive", "negative"});
  out.emotion = pick(emotions);
  out.overall = pick(all);
  return out;
}

/// True when a TagResult agrees with the oracle on all counts and labels.
inline bool agrees(const TagResult& tag, const BruteCounts& counts, const BruteLabels& labels) {
  for (auto c : kAllCategories) {
    if (static_cast<int>(tag.counts[c]) != counts.get(std::string(name_of(c)))) return false;
  }
  return name_of(tag.labels.sentiment) == labels.sentiment &&
         name_of(tag.labels.emotion) == labels.emotion &&
         name_of(tag.labels.overall) == labels.overall && tag.labels.tied == labels.tied;
}

}  // namespace tweetlex::support
