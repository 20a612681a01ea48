#include "tweetlex/lexicon.hpp"

#include <fstream>
#include <unordered_set>

#include <fmt/format.h>

#include "tweetlex/errors.hpp"
#include "tweetlex/text.hpp"

namespace tweetlex {

namespace {

bool has_whitespace(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const auto d = text::decode(s, i);
    if (text::is_space(d.cp)) return true;
    i += d.length;
  }
  return false;
}

bool needs_lowering(std::string_view s) {
  for (char c : s) {
    if ((c >= 'A' && c <= 'Z') || static_cast<unsigned char>(c) >= 0x80) return true;
  }
  return false;
}

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open lexicon '{}'", path.string()));
  return parse(in, path.string());
}

Lexicon Lexicon::parse(std::istream& in, std::string_view source_name) {
  Lexicon lex;
  // Every (word, category) row seen, to reject repeats even for flag-0 rows.
  std::unordered_set<std::string> seen_pairs;
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](std::string_view what) {
    return LoadError(fmt::format("{}:{}: {}", source_name, line_no, what));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (text::trim(line).empty() || line.front() == '#') continue;

    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw fail("expected three tab-separated fields");
    }
    const std::string word = text::to_lower(std::string_view(line).substr(0, t1));
    const auto cat_token = std::string_view(line).substr(t1 + 1, t2 - t1 - 1);
    const auto flag = text::trim(std::string_view(line).substr(t2 + 1));

    if (word.empty() || has_whitespace(word)) throw fail(fmt::format("invalid word '{}'", word));
    const auto category = parse_category(cat_token);
    if (!category) throw fail(fmt::format("unknown category '{}'", cat_token));
    if (flag != "0" && flag != "1") throw fail(fmt::format("flag '{}' is not 0 or 1", flag));

    std::string pair_key = word;
    pair_key.push_back('\t');
    pair_key.append(name_of(*category));
    if (!seen_pairs.insert(std::move(pair_key)).second) {
      throw fail(fmt::format("duplicate row for ({}, {})", word, cat_token));
    }
    if (flag == "1") lex.entries_[word].insert(*category);
  }
  if (in.bad()) throw IoError(fmt::format("error reading lexicon '{}'", source_name));
  return lex;
}

CategorySet Lexicon::categories_of(std::string_view word) const {
  if (needs_lowering(word)) {
    const auto it = entries_.find(text::to_lower(word));
    return it == entries_.end() ? CategorySet{} : it->second;
  }
  const auto it = entries_.find(word);
  return it == entries_.end() ? CategorySet{} : it->second;
}

}  // namespace tweetlex
