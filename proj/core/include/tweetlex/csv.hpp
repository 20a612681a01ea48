#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace tweetlex::csv {

/// One RFC 4180 record together with the physical line it started on.
struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
  bool well_formed = true;  // false on an unterminated quote or stray quote
};

/// Streams RFC 4180 records. Quoted fields may contain commas, doubled
/// quotes and line breaks. A trailing CR before LF is dropped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Returns false at end of input.
  bool next(Record& out);

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Splits a single physical line (no embedded newlines).
Record parse_line(std::string_view line);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

}  // namespace tweetlex::csv
