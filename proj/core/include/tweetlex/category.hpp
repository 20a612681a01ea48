#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>

namespace tweetlex {

// Enumerator order is the canonical order used for tie-breaking and for
// every report column: the two sentiments first, then the eight emotions.
enum class Category : std::uint8_t {
  positive,
  negative,
  joy,
  trust,
  anticipation,
  surprise,
  fear,
  sadness,
  anger,
  disgust,
};

inline constexpr std::size_t kCategoryCount = 10;
inline constexpr std::size_t kSentimentCount = 2;
inline constexpr std::size_t kEmotionCount = 8;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::positive, Category::negative, Category::joy,
    Category::trust,    Category::anticipation, Category::surprise,
    Category::fear,     Category::sadness,  Category::anger,
    Category::disgust,
};

inline constexpr std::array<Category, kSentimentCount> kSentiments = {
    Category::positive, Category::negative};

inline constexpr std::array<Category, kEmotionCount> kEmotions = {
    Category::joy,  Category::trust,   Category::anticipation,
    Category::surprise, Category::fear, Category::sadness,
    Category::anger, Category::disgust};

constexpr std::size_t index_of(Category c) { return static_cast<std::size_t>(c); }

constexpr bool is_sentiment(Category c) {
  return c == Category::positive || c == Category::negative;
}
constexpr bool is_emotion(Category c) { return !is_sentiment(c); }

std::string_view name_of(Category c);

/// Parses a lowercase EmoLex category token ("anger", "positive", ...).
std::optional<Category> parse_category(std::string_view token);

/// Set of categories packed into the low 10 bits.
class CategorySet {
 public:
  constexpr CategorySet() = default;
  constexpr explicit CategorySet(std::uint16_t bits) : bits_(bits) {}
  constexpr CategorySet(std::initializer_list<Category> cats) {
    for (auto c : cats) insert(c);
  }

  constexpr void insert(Category c) { bits_ |= std::uint16_t(1u << index_of(c)); }
  constexpr bool contains(Category c) const { return (bits_ >> index_of(c)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }
  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (auto b = bits_; b != 0; b &= std::uint16_t(b - 1)) ++n;
    return n;
  }

  friend constexpr bool operator==(CategorySet, CategorySet) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// A per-channel tweet label: one of the ten categories, or neutral.
/// The first ten enumerators mirror Category.
enum class Label : std::uint8_t {
  positive,
  negative,
  joy,
  trust,
  anticipation,
  surprise,
  fear,
  sadness,
  anger,
  disgust,
  neutral,
};

inline constexpr std::size_t kLabelCount = 11;

constexpr Label to_label(Category c) { return static_cast<Label>(c); }
constexpr std::size_t index_of(Label l) { return static_cast<std::size_t>(l); }

std::string_view name_of(Label l);

/// Labeling channels: each tweet receives one label per channel.
enum class Channel : std::uint8_t { sentiment, emotion, overall };

inline constexpr std::array<Channel, 3> kChannels = {
    Channel::sentiment, Channel::emotion, Channel::overall};

std::string_view name_of(Channel ch);

/// Labels a channel can produce, in report order (neutral last).
std::span<const Label> labels_of(Channel ch);

}  // namespace tweetlex
