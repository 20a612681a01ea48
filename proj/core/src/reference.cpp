#include "tweetlex/reference.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "tweetlex/errors.hpp"
#include "tweetlex/text.hpp"

namespace tweetlex::reference {

namespace {

std::u32string decode_all(std::string_view s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    const auto d = text::decode(s, i);
    out.push_back(d.cp);
    i += d.length;
  }
  return out;
}

std::string encode_all(std::u32string_view s) {
  std::string out;
  for (auto cp : s) text::append_utf8(out, cp);
  return out;
}

std::u32string lower_all(std::u32string s) {
  for (auto& cp : s) cp = text::to_lower(cp);
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& contents) {
  std::vector<std::string> lines;
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (!lines.empty() && lines[0].starts_with("\xEF\xBB\xBF")) lines[0].erase(0, 3);
  return lines;
}

bool matches_at(const std::u32string& s, std::size_t pos, std::u32string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (text::to_lower(s[pos + k]) != prefix[k]) return false;
  }
  return true;
}

// Finds '@name' / '#tag' occurrences; marks their code points in `removed`.
std::vector<std::u32string> find_prefixed(const std::u32string& s, char32_t sigil,
                                          std::vector<bool>& removed) {
  std::vector<std::u32string> found;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != sigil) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < s.size() && text::is_entity_char(s[j])) ++j;
    if (j == i + 1) {
      ++i;
      continue;
    }
    found.push_back(s.substr(i + 1, j - i - 1));
    for (std::size_t k = i; k < j; ++k) removed[k] = true;
    i = j;
  }
  return found;
}

std::vector<std::u32string> find_urls(const std::u32string& s, std::vector<bool>& removed) {
  std::vector<std::u32string> found;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t body = 0;
    for (std::u32string_view prefix : {U"https://", U"http://", U"www."}) {
      if (matches_at(s, i, prefix)) {
        body = i + prefix.size();
        break;
      }
    }
    if (body == 0) {
      ++i;
      continue;
    }
    std::size_t j = body;
    while (j < s.size() && !text::is_space(s[j])) ++j;
    if (j == body) {
      ++i;
      continue;
    }
    found.push_back(s.substr(i, j - i));
    for (std::size_t k = i; k < j; ++k) removed[k] = true;
    i = j;
  }
  return found;
}

std::u32string collapse(const std::u32string& word) {
  std::u32string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const bool third_in_run = out.size() >= 2 && out[out.size() - 1] == word[i] &&
                              out[out.size() - 2] == word[i];
    if (!third_in_run) out.push_back(word[i]);
  }
  return out;
}

std::u32string normalize_location(std::string_view raw) {
  const auto s = lower_all(decode_all(raw));
  std::u32string out;
  for (auto cp : s) {
    if (text::is_space(cp)) {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(cp);
    }
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  return out;
}

}  // namespace

RowLexicon RowLexicon::load(const std::filesystem::path& path) { return parse(read_file(path)); }

RowLexicon RowLexicon::parse(std::string_view contents) {
  RowLexicon lex;
  for (const auto& line : split_lines(std::string(contents))) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string f;
    while (std::getline(in, f, '\t')) fields.push_back(f);
    if (fields.size() != 3) continue;
    const auto cat = parse_category(fields[1]);
    if (!cat) continue;
    const auto word = encode_all(lower_all(decode_all(fields[0])));
    lex.rows_.emplace(word, std::pair{*cat, text::trim(fields[2]) == "1"});
  }
  return lex;
}

CategorySet RowLexicon::categories_of(std::string_view word) const {
  const auto key = encode_all(lower_all(decode_all(word)));
  CategorySet set;
  const auto [lo, hi] = rows_.equal_range(key);
  for (auto it = lo; it != hi; ++it) {
    if (it->second.second) set.insert(it->second.first);
  }
  return set;
}

std::vector<std::string> load_stopwords(const std::filesystem::path& path) {
  std::vector<std::string> words;
  for (const auto& line : split_lines(read_file(path))) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.push_back(encode_all(lower_all(decode_all(t))));
  }
  return words;
}

CleanTweet preprocess(const TweetRecord& record, const std::vector<std::string>& stopwords) {
  CleanTweet clean;
  clean.record_id = record.id;
  const auto raw = decode_all(record.text);

  // 1. entities, each found on the raw text, then blanked.
  std::vector<bool> removed(raw.size(), false);
  for (const auto& u : find_urls(raw, removed)) clean.urls.push_back(encode_all(u));
  for (const auto& m : find_prefixed(raw, U'@', removed)) {
    clean.mentions.push_back(encode_all(lower_all(m)));
  }
  for (const auto& h : find_prefixed(raw, U'#', removed)) clean.hashtags.push_back(encode_all(h));
  std::u32string s = raw;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (removed[i]) s[i] = U' ';
  }
  // 2. punctuation and symbols become spaces.
  for (auto& cp : s) {
    if (!text::is_alnum(cp)) cp = U' ';
  }
  // 3. lowercase.
  s = lower_all(std::move(s));
  // 4. split.
  std::vector<std::u32string> words;
  std::u32string cur;
  for (auto cp : s) {
    if (cp == U' ') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) words.push_back(cur);
  // 5. collapse repeats.
  for (auto& w : words) w = collapse(w);
  // 6. drop single and double characters.
  std::erase_if(words, [](const std::u32string& w) { return w.size() <= 2; });
  // 7. stopwords.
  for (const auto& w : words) {
    const auto utf8 = encode_all(w);
    if (std::find(stopwords.begin(), stopwords.end(), utf8) == stopwords.end()) {
      clean.tokens.push_back(utf8);
    }
  }
  // 8. blank check.
  clean.is_blank = clean.tokens.empty();
  for (const auto& tok : clean.tokens) {
    const auto cps = decode_all(tok);
    const bool non_latin = std::any_of(cps.begin(), cps.end(), [](char32_t cp) {
      return text::is_alnum(cp) && !text::is_latin(cp);
    });
    if (non_latin) ++clean.non_latin_tokens;
  }
  return clean;
}

Labels label(const CategoryCounts& counts) {
  // Rank candidates by (count desc, canonical position asc) and read off
  // the winner and whether the runner-up shares its count.
  auto pick = [&](std::vector<Category> candidates, bool& tied) {
    std::vector<std::pair<std::uint32_t, std::size_t>> ranked;
    for (std::size_t i = 0; i < candidates.size(); ++i) ranked.push_back({counts[candidates[i]], i});
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    if (ranked.front().first == 0) return Label::neutral;
    if (ranked.size() > 1 && ranked[1].first == ranked[0].first) tied = true;
    return to_label(candidates[ranked.front().second]);
  };
  Labels out;
  out.sentiment = pick({Category::positive, Category::negative}, out.tied);
  out.emotion = pick({Category::joy, Category::trust, Category::anticipation, Category::surprise,
                      Category::fear, Category::sadness, Category::anger, Category::disgust},
                     out.tied);
  out.overall = pick({kAllCategories.begin(), kAllCategories.end()}, out.tied);
  return out;
}

std::optional<Region> resolve(std::optional<std::string_view> raw,
                              const std::vector<GazetteerRule>& rules) {
  if (!raw) return std::nullopt;
  const auto loc = normalize_location(*raw);
  if (loc.empty()) return std::nullopt;
  for (const auto& rule : rules) {
    const auto pat = decode_all(rule.pattern);
    for (std::size_t p = 0; p + pat.size() <= loc.size(); ++p) {
      if (loc.compare(p, pat.size(), pat) != 0) continue;
      if (rule.substring) return rule.region;
      const bool left_ok = p == 0 || !text::is_alnum(loc[p - 1]);
      const bool right_ok = p + pat.size() == loc.size() || !text::is_alnum(loc[p + pat.size()]);
      if (left_ok && right_ok) return rule.region;
    }
  }
  return std::nullopt;
}

Analysis analyze(std::span<const TweetRecord> records, const ReferenceResources& res,
                 const AnalyzeOptions& options) {
  Analysis out;
  auto& s = out.summary;
  s.mention_filter = options.mention_filter;
  s.records_read = records.size();
  const std::int64_t offset_seconds = std::int64_t{options.analysis_offset.minutes} * 60;

  for (const auto& rec : records) {
    const auto clean = preprocess(rec, res.stopwords);
    if (clean.is_blank) {
      ++s.blanks_dropped;
      continue;
    }
    ++s.tweets_tagged;
    s.non_latin_tokens += clean.non_latin_tokens;

    TagResult tag;
    tag.record_id = rec.id;
    for (const auto& tok : clean.tokens) {
      const auto cats = res.lexicon.categories_of(tok);
      for (auto c : kAllCategories) {
        if (cats.contains(c)) tag.counts[c] += 1;
      }
    }
    tag.labels = reference::label(tag.counts);

    if (options.mention_filter) {
      const auto& m = clean.mentions;
      if (std::count(m.begin(), m.end(), *options.mention_filter) == 0) continue;
    }
    ++s.matched_tweets;
    if (tag.labels.sentiment == Label::neutral) ++s.neutral_by_channel[0];
    if (tag.labels.emotion == Label::neutral) ++s.neutral_by_channel[1];
    if (tag.labels.overall == Label::neutral) ++s.neutral_by_channel[2];
    if (tag.labels.tied) ++s.tie_count;

    const std::int64_t local = rec.created_at.time_since_epoch().count() + offset_seconds;
    std::int64_t day = local / 86400;
    if (local % 86400 < 0) --day;
    const auto hour = static_cast<int>((local - day * 86400) / 3600);
    out.daily.add(std::chrono::sys_days{std::chrono::days{day}}, tag.labels);
    out.hourly.add_to_slot(hour);

    for (const auto& m : clean.mentions) out.mentions.add(m);
    for (const auto& h : clean.hashtags) out.hashtags.add(text::ascii_upper(h));

    std::optional<std::string_view> location;
    if (rec.user_location) location = *rec.user_location;
    const auto region = resolve(location, res.rules);
    if (!region) {
      ++s.location_unknown;
    } else {
      if (*region == Region::foreign) {
        ++s.located_foreign;
      } else if (*region == Region::india_unspecified) {
        ++s.located_india_unspecified;
      } else {
        ++s.located_states;
      }
      out.regions.add(*region, tag.labels);
    }
    if (options.keep_tags) out.tags.push_back(std::move(tag));
  }
  return out;
}

}  // namespace tweetlex::reference
