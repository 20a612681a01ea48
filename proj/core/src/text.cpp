#include "tweetlex/text.hpp"

namespace tweetlex::text {

Decoded decode(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return {kReplacement, 1};
  }
  if (pos + len > s.size()) return {kReplacement, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {kReplacement, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {kReplacement, 1};
  return {cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

// Non-ASCII blocks treated as punctuation, symbols, controls or emoji.
bool is_non_word_block(char32_t cp) {
  return in(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7 ||
         in(cp, 0x0964, 0x0965) ||    // Devanagari danda
         in(cp, 0x2000, 0x206F) ||    // general punctuation, zero-width chars
         in(cp, 0x20A0, 0x20CF) ||    // currency
         in(cp, 0x2100, 0x214F) ||    // letterlike symbols
         in(cp, 0x2190, 0x2BFF) ||    // arrows .. misc symbols and arrows
         in(cp, 0x2E00, 0x2E7F) ||    // supplemental punctuation
         in(cp, 0x3000, 0x303F) ||    // CJK symbols and punctuation
         in(cp, 0xE000, 0xF8FF) ||    // private use
         in(cp, 0xFE00, 0xFE0F) ||    // variation selectors
         in(cp, 0xFE30, 0xFE6F) ||    // CJK compatibility / small forms
         in(cp, 0xFF00, 0xFF0F) || in(cp, 0xFF1A, 0xFF20) ||
         in(cp, 0xFF3B, 0xFF40) || in(cp, 0xFF5B, 0xFF65) ||
         in(cp, 0xFFF0, 0xFFFF) ||    // specials, including U+FFFD
         in(cp, 0x1F000, 0x1FAFF) ||  // emoji and pictographs
         in(cp, 0xE0000, 0xE007F);    // tag characters
}

}  // namespace

bool is_alnum(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'0' && cp <= U'9');
  }
  return !is_space(cp) && !is_non_word_block(cp);
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 32;
  if (in(cp, 0x410, 0x42F)) return cp + 32;
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  return cp;
}

bool is_latin(char32_t cp) {
  if (cp < 0x80) return is_alnum(cp);
  return (in(cp, 0xC0, 0x24F) && cp != 0xD7 && cp != 0xF7) || in(cp, 0x1E00, 0x1EFF);
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const auto d = decode(s, i);
    if (d.cp < 0x80) {
      out.push_back(static_cast<char>(to_lower(d.cp)));
    } else if (d.cp == kReplacement && d.length == 1) {
      out.push_back(s[i]);  // keep undecodable bytes as they are
    } else {
      append_utf8(out, to_lower(d.cp));
    }
    i += d.length;
  }
  return out;
}

std::string ascii_upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
  }
  return out;
}

std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += decode(s, i).length) ++n;
  return n;
}

bool has_non_latin(std::string_view token) {
  for (std::size_t i = 0; i < token.size();) {
    const auto d = decode(token, i);
    if (is_alnum(d.cp) && !is_latin(d.cp)) return true;
    i += d.length;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty()) {
    const auto d = decode(s, 0);
    if (!is_space(d.cp)) break;
    s.remove_prefix(d.length);
  }
  while (!s.empty()) {
    // Walk back to the start of the last code point.
    std::size_t start = s.size() - 1;
    while (start > 0 && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) --start;
    const auto d = decode(s, start);
    if (!is_space(d.cp)) break;
    s.remove_suffix(s.size() - start);
  }
  return s;
}

}  // namespace tweetlex::text
