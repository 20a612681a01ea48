#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// UTF-8 helpers shared by the tokenizer, entity grammar and lookups.
//
// Character classes are deliberately coarse. A code point is "alnum" when it
// is an ASCII letter or digit, or a non-ASCII code point outside the
// punctuation, symbol, space, emoji and private-use blocks. This keeps
// Devanagari (including its combining vowel signs) together as words while
// treating curly quotes, ellipses, dandas and emoji as separators.
namespace tweetlex::text {

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed, >= 1
};

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes the code point starting at s[pos]. Invalid or truncated
/// sequences decode to U+FFFD with length 1.
Decoded decode(std::string_view s, std::size_t pos);

void append_utf8(std::string& out, char32_t cp);

bool is_space(char32_t cp);
bool is_alnum(char32_t cp);

/// Mention/hashtag body characters: alnum plus underscore.
inline bool is_entity_char(char32_t cp) { return cp == U'_' || is_alnum(cp); }

/// Simple one-to-one lowercase mapping for ASCII, Latin-1, basic Greek and
/// basic Cyrillic. Other code points map to themselves.
char32_t to_lower(char32_t cp);

/// Latin-script letter or digit (ASCII, Latin-1 and Latin Extended blocks).
bool is_latin(char32_t cp);

std::string to_lower(std::string_view s);
std::string ascii_upper(std::string_view s);

std::size_t codepoint_count(std::string_view s);

/// True when the token contains at least one alnum code point outside the
/// Latin blocks.
bool has_non_latin(std::string_view token);

std::string_view trim(std::string_view s);

}  // namespace tweetlex::text
