#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "tweetlex/timestamp.hpp"

namespace tweetlex {

namespace csv {
class Reader;
}

struct TweetRecord {
  std::string id;
  Instant created_at;
  std::string text;
  std::optional<std::string> user_location;
};

enum class InputFormat { jsonl, csv };

std::optional<InputFormat> parse_input_format(std::string_view s);

/// Key/value view of one input line before validation. A field that is
/// present but has the wrong type is recorded in `type_errors`.
struct RawRecord {
  std::optional<std::string> id;
  std::optional<std::string> created_at;
  std::optional<std::string> text;
  std::optional<std::string> user_location;
  std::vector<std::string> type_errors;
};

struct Rejection {
  std::string reason;  // "id", "timestamp", "text", "user_location", ...
};

/// Checks id, timestamp and text in that order and names the first field
/// that is missing or malformed.
std::variant<TweetRecord, Rejection> validate_record(const RawRecord& raw,
                                                     UtcOffset default_offset);

/// Parses one JSONL line. Returns nullopt if the line is not a JSON object.
std::optional<RawRecord> parse_jsonl_line(std::string_view line);

struct IngestOptions {
  InputFormat format = InputFormat::jsonl;
  UtcOffset default_offset = kIndiaStandardTime;
  // Range filtering compares local dates in this zone; both ends inclusive.
  UtcOffset analysis_offset = kIndiaStandardTime;
  std::optional<std::chrono::year_month_day> from;
  std::optional<std::chrono::year_month_day> to;
};

struct Diagnostic {
  std::size_t line = 0;
  std::string reason;
};

struct IngestTally {
  std::size_t lines = 0;     // input records seen (CSV header excluded)
  std::size_t accepted = 0;
  std::map<std::string, std::size_t> skipped_by_reason;

  std::size_t skipped() const;
};

/// Sequential reader over one JSONL or CSV source. Bad lines are tallied
/// and reported through the diagnostic sink; they never end the stream.
class RecordReader {
 public:
  using DiagnosticSink = std::function<void(const Diagnostic&)>;

  RecordReader(std::istream& in, IngestOptions options);
  ~RecordReader();

  /// Opens a file, or standard input when path is "-". Throws IoError if
  /// the file cannot be opened and LoadError if a CSV header lacks a
  /// required column.
  static std::unique_ptr<RecordReader> open(const std::filesystem::path& path,
                                            IngestOptions options);

  void set_diagnostic_sink(DiagnosticSink sink) { sink_ = std::move(sink); }

  std::optional<TweetRecord> next();

  const IngestTally& tally() const { return tally_; }

 private:
  RecordReader(std::unique_ptr<std::istream> owned, IngestOptions options);

  std::optional<RawRecord> next_raw(std::size_t& line, bool& eof);
  void read_csv_header();
  void skip(std::size_t line, std::string reason);
  bool in_range(Instant t) const;

  std::unique_ptr<std::istream> owned_;
  std::istream& in_;
  IngestOptions options_;
  DiagnosticSink sink_;
  IngestTally tally_;
  std::unordered_set<std::string> seen_ids_;
  std::unique_ptr<csv::Reader> csv_;
  std::size_t physical_line_ = 0;
  bool header_read_ = false;
  // CSV column positions (npos when absent).
  std::size_t col_id_ = 0, col_created_ = 1, col_text_ = 2, col_location_ = 3;
  std::size_t column_count_ = 4;
};

struct ReadResult {
  std::vector<TweetRecord> records;
  IngestTally tally;
  std::vector<Diagnostic> diagnostics;
};

/// Reads a whole source into memory.
ReadResult read_records(const std::filesystem::path& path, IngestOptions options);
ReadResult read_records(std::istream& in, IngestOptions options);

}  // namespace tweetlex
