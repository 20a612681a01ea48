#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "tweetlex/category.hpp"

namespace tweetlex {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

/// Word -> category associations in NRC EmoLex word-level format:
///
///     word<TAB>category<TAB>0|1
///
/// Only words with at least one flag-1 row are stored. Blank lines and
/// lines starting with '#' are ignored. Any other malformed row (wrong
/// field count, unknown category, flag outside {0,1}, repeated
/// word/category pair, word containing whitespace) throws LoadError naming
/// the line.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::istream& in, std::string_view source_name = "<stream>");

  /// Case-insensitive exact-match lookup; unknown words yield an empty set.
  CategorySet categories_of(std::string_view word) const;

  std::size_t entry_count() const { return entries_.size(); }

  const auto& entries() const { return entries_; }

 private:
  std::unordered_map<std::string, CategorySet, StringHash, std::equal_to<>> entries_;
};

}  // namespace tweetlex
