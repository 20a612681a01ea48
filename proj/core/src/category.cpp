#include "tweetlex/category.hpp"

#include <array>

namespace tweetlex {

namespace {

constexpr std::array<std::string_view, kLabelCount> kLabelNames = {
    "positive", "negative", "joy",     "trust", "anticipation", "surprise",
    "fear",     "sadness",  "anger",   "disgust", "neutral",
};

constexpr std::array<Label, 3> kSentimentLabels = {Label::positive, Label::negative,
                                                   Label::neutral};
constexpr std::array<Label, 9> kEmotionLabels = {
    Label::joy,  Label::trust,   Label::anticipation, Label::surprise, Label::fear,
    Label::sadness, Label::anger, Label::disgust,      Label::neutral};
constexpr std::array<Label, kLabelCount> kOverallLabels = {
    Label::positive, Label::negative, Label::joy,   Label::trust,
    Label::anticipation, Label::surprise, Label::fear, Label::sadness,
    Label::anger,    Label::disgust,  Label::neutral};

}  // namespace

std::string_view name_of(Category c) { return kLabelNames[index_of(c)]; }
std::string_view name_of(Label l) { return kLabelNames[index_of(l)]; }

std::optional<Category> parse_category(std::string_view token) {
  for (auto c : kAllCategories) {
    if (name_of(c) == token) return c;
  }
  return std::nullopt;
}

std::string_view name_of(Channel ch) {
  switch (ch) {
    case Channel::sentiment: return "sentiment";
    case Channel::emotion: return "emotion";
    case Channel::overall: return "overall";
  }
  return "?";
}

std::span<const Label> labels_of(Channel ch) {
  switch (ch) {
    case Channel::sentiment: return kSentimentLabels;
    case Channel::emotion: return kEmotionLabels;
    case Channel::overall: return kOverallLabels;
  }
  return {};
}

}  // namespace tweetlex
