#include "tweetlex/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

#include <fmt/format.h>

#include "tweetlex/errors.hpp"
#include "tweetlex/text.hpp"

namespace tweetlex {

namespace {

using Span = std::pair<std::size_t, std::size_t>;  // [begin, end) in bytes

// Byte length of the maximal run of entity characters starting at pos.
std::size_t entity_run(std::string_view s, std::size_t pos) {
  std::size_t j = pos;
  while (j < s.size()) {
    const auto d = text::decode(s, j);
    if (!text::is_entity_char(d.cp)) break;
    j += d.length;
  }
  return j - pos;
}

template <typename OnMatch>
void scan_prefixed(std::string_view s, char sigil, OnMatch on_match) {
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == sigil) {
      const auto n = entity_run(s, i + 1);
      if (n > 0) {
        on_match(Span{i, i + 1 + n}, s.substr(i + 1, n));
        i += 1 + n;
        continue;
      }
    }
    ++i;
  }
}

bool starts_with_nocase(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    char c = s[pos + k];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    if (c != prefix[k]) return false;
  }
  return true;
}

template <typename OnMatch>
void scan_urls(std::string_view s, OnMatch on_match) {
  for (std::size_t i = 0; i < s.size();) {
    std::size_t prefix = 0;
    if (starts_with_nocase(s, i, "https://")) {
      prefix = 8;
    } else if (starts_with_nocase(s, i, "http://")) {
      prefix = 7;
    } else if (starts_with_nocase(s, i, "www.")) {
      prefix = 4;
    }
    if (prefix > 0) {
      std::size_t j = i + prefix;
      while (j < s.size()) {
        const auto d = text::decode(s, j);
        if (text::is_space(d.cp)) break;
        j += d.length;
      }
      if (j > i + prefix) {
        on_match(Span{i, j}, s.substr(i, j - i));
        i = j;
        continue;
      }
    }
    ++i;
  }
}

// Accumulates one token at a time, collapsing runs as code points arrive.
class TokenBuilder {
 public:
  TokenBuilder(const Stopwords& stopwords, std::vector<std::string>& out)
      : stopwords_(stopwords), out_(out) {}

  void push(char32_t cp) {
    cp = text::to_lower(cp);
    if (cp == last_) {
      if (++run_ > 2) return;
    } else {
      last_ = cp;
      run_ = 1;
    }
    text::append_utf8(current_, cp);
    ++length_;
  }

  void finish() {
    if (length_ >= 3 && !stopwords_.contains(current_)) out_.push_back(current_);
    current_.clear();
    length_ = 0;
    last_ = 0;
    run_ = 0;
  }

 private:
  const Stopwords& stopwords_;
  std::vector<std::string>& out_;
  std::string current_;
  std::size_t length_ = 0;
  char32_t last_ = 0;
  int run_ = 0;
};

void tokenize_into(std::string_view s, const Stopwords& stopwords, std::vector<std::string>& out,
                   const std::vector<Span>& blanked) {
  TokenBuilder builder(stopwords, out);
  std::size_t next_span = 0;
  for (std::size_t i = 0; i < s.size();) {
    while (next_span < blanked.size() && blanked[next_span].second <= i) ++next_span;
    if (next_span < blanked.size() && blanked[next_span].first <= i) {
      builder.finish();
      i = blanked[next_span].second;
      continue;
    }
    const auto d = text::decode(s, i);
    if (text::is_alnum(d.cp)) {
      builder.push(d.cp);
    } else {
      builder.finish();
    }
    i += d.length;
  }
  builder.finish();
}

}  // namespace

Stopwords::Stopwords(std::initializer_list<std::string_view> words) {
  for (auto w : words) insert(w);
}

void Stopwords::insert(std::string_view word) {
  const auto trimmed = text::trim(word);
  if (!trimmed.empty()) words_.insert(text::to_lower(trimmed));
}

Stopwords Stopwords::parse(std::istream& in) {
  Stopwords sw;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    sw.insert(t);
  }
  return sw;
}

Stopwords Stopwords::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open stopword list '{}'", path.string()));
  return parse(in);
}

std::vector<std::string> extract_mentions(std::string_view text) {
  std::vector<std::string> out;
  scan_prefixed(text, '@', [&](Span, std::string_view body) { out.push_back(text::to_lower(body)); });
  return out;
}

std::vector<std::string> extract_hashtags(std::string_view text) {
  std::vector<std::string> out;
  scan_prefixed(text, '#', [&](Span, std::string_view body) { out.emplace_back(body); });
  return out;
}

std::vector<std::string> extract_urls(std::string_view text) {
  std::vector<std::string> out;
  scan_urls(text, [&](Span, std::string_view url) { out.emplace_back(url); });
  return out;
}

std::string strip_urls(std::string_view text) {
  std::string out;
  std::size_t copied = 0;
  scan_urls(text, [&](Span span, std::string_view) {
    out.append(text.substr(copied, span.first - copied));
    out.push_back(' ');
    copied = span.second;
  });
  out.append(text.substr(copied));
  return out;
}

std::string collapse_repeats(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  char32_t last = 0;
  int run = 0;
  for (std::size_t i = 0; i < token.size();) {
    const auto d = text::decode(token, i);
    if (i == 0 || d.cp != last) {
      last = d.cp;
      run = 1;
    } else {
      ++run;
    }
    if (run <= 2) out.append(token.substr(i, d.length));
    i += d.length;
  }
  return out;
}

std::vector<std::string> normalize_tokens(std::string_view text, const Stopwords& stopwords) {
  std::vector<std::string> out;
  tokenize_into(text, stopwords, out, {});
  return out;
}

CleanTweet preprocess_text(std::string_view record_id, std::string_view text,
                           const Stopwords& stopwords) {
  CleanTweet clean;
  clean.record_id = std::string(record_id);

  std::vector<Span> spans;
  scan_urls(text, [&](Span span, std::string_view url) {
    spans.push_back(span);
    clean.urls.emplace_back(url);
  });
  scan_prefixed(text, '@', [&](Span span, std::string_view body) {
    spans.push_back(span);
    clean.mentions.push_back(text::to_lower(body));
  });
  scan_prefixed(text, '#', [&](Span span, std::string_view body) {
    spans.push_back(span);
    clean.hashtags.emplace_back(body);
  });

  // Merge overlapping spans so the tokenizer can walk them in order.
  std::sort(spans.begin(), spans.end());
  std::vector<Span> merged;
  for (const auto& s : spans) {
    if (!merged.empty() && s.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, s.second);
    } else {
      merged.push_back(s);
    }
  }

  tokenize_into(text, stopwords, clean.tokens, merged);
  clean.is_blank = clean.tokens.empty();
  for (const auto& tok : clean.tokens) {
    if (text::has_non_latin(tok)) ++clean.non_latin_tokens;
  }
  return clean;
}

CleanTweet preprocess(const TweetRecord& record, const Stopwords& stopwords) {
  return preprocess_text(record.id, record.text, stopwords);
}

}  // namespace tweetlex
