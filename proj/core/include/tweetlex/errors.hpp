#pragma once

#include <stdexcept>
#include <string>

namespace tweetlex {

/// Fatal configuration or input-format problem (bad lexicon row, unknown
/// region, ...). Maps to CLI exit code 1.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read, or written. Maps to CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tweetlex
