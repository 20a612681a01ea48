#pragma once

#include <string>
#include <vector>

namespace tweetlex::support {

// Lexicon used by the tie fixtures.
inline const std::string kTieLexicon =
    "happy\tjoy\t1\nhappy\tpositive\t1\n"
    "scam\tanger\t1\nscam\tdisgust\t1\nscam\tnegative\t1\n"
    "trust\ttrust\t1\ntrust\tpositive\t1\n"
    "gloom\tsadness\t1\ngloom\tnegative\t1\n"
    "dread\tfear\t1\ndread\tnegative\t1\n"
    "await\tanticipation\t1\n"
    "wow\tsurprise\t1\n"
    "yuck\tdisgust\t1\n";

struct TieFixture {
  std::string text;
  std::string sentiment, emotion, overall;
  bool tied;
};

// Expected labels traced by hand from the lexicon above.
inline const std::vector<TieFixture> kTieFixtures = {
    // positive 2, joy 1, trust 1
    {"happy trust", "positive", "joy", "positive", true},
    // negative 1, anger 1, disgust 1
    {"scam", "negative", "anger", "negative", true},
    // positive 1, joy 1
    {"happy", "positive", "joy", "positive", true},
    // positive 1, negative 1, joy 1, anger 1, disgust 1
    {"happy scam", "positive", "joy", "positive", true},
    // negative 3, sadness 3
    {"gloom gloom gloom", "negative", "sadness", "negative", true},
    // positive 1, negative 1, trust 1, fear 1
    {"trust dread", "positive", "trust", "positive", true},
    // anticipation 1, surprise 1
    {"await wow", "neutral", "anticipation", "anticipation", true},
    // negative 2, sadness 1, fear 1
    {"gloom dread", "negative", "fear", "negative", true},
    // negative 1, anger 1, disgust 2
    {"yuck scam", "negative", "disgust", "disgust", false},
    // positive 2, joy 2, negative 1, anger 1, disgust 1
    {"happy happy scam", "positive", "joy", "positive", true},
    // positive 3, joy 2, trust 1
    {"happy happy trust", "positive", "joy", "positive", false},
    // surprise 1
    {"wow", "neutral", "surprise", "surprise", false},
    // negative 2, sadness 2, fear 0 vs positive 2: sentiment tie
    {"gloom gloom happy trust", "positive", "sadness", "positive", true},
    // nothing matches
    {"tax council", "neutral", "neutral", "neutral", false},
};

}  // namespace tweetlex::support
