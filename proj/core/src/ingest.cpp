#include "tweetlex/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <fmt/format.h>
#include <json.hpp>

#include "tweetlex/csv.hpp"
#include "tweetlex/errors.hpp"
#include "tweetlex/text.hpp"

namespace tweetlex {

namespace {

constexpr auto npos = std::string_view::npos;

bool is_blank_line(std::string_view line) { return text::trim(line).empty(); }

RawRecord blank_marker() {
  RawRecord raw;
  raw.type_errors.emplace_back("blank");
  return raw;
}

bool has(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

std::optional<InputFormat> parse_input_format(std::string_view s) {
  if (s == "jsonl") return InputFormat::jsonl;
  if (s == "csv") return InputFormat::csv;
  return std::nullopt;
}

std::size_t IngestTally::skipped() const {
  std::size_t n = 0;
  for (const auto& [reason, count] : skipped_by_reason) n += count;
  return n;
}

std::variant<TweetRecord, Rejection> validate_record(const RawRecord& raw,
                                                     UtcOffset default_offset) {
  if (!raw.id || raw.id->empty() || has(raw.type_errors, "id")) return Rejection{"id"};
  if (!raw.created_at || has(raw.type_errors, "created_at")) return Rejection{"timestamp"};
  const auto ts = parse_timestamp(text::trim(*raw.created_at), default_offset);
  if (!ts) return Rejection{"timestamp"};
  if (!raw.text || has(raw.type_errors, "text")) return Rejection{"text"};
  if (has(raw.type_errors, "user_location")) return Rejection{"user_location"};

  TweetRecord rec{*raw.id, *ts, *raw.text, std::nullopt};
  if (raw.user_location && !raw.user_location->empty()) rec.user_location = *raw.user_location;
  return rec;
}

std::optional<RawRecord> parse_jsonl_line(std::string_view line) {
  auto doc = nlohmann::json::parse(line.begin(), line.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;

  RawRecord raw;
  auto take = [&](const char* key, std::optional<std::string>& slot, bool null_ok) {
    const auto it = doc.find(key);
    if (it == doc.end()) return;
    if (it->is_string()) {
      slot = it->get<std::string>();
    } else if (!(null_ok && it->is_null())) {
      raw.type_errors.emplace_back(key);
    }
  };
  take("id", raw.id, false);
  take("created_at", raw.created_at, false);
  take("text", raw.text, false);
  take("user_location", raw.user_location, true);
  return raw;
}

RecordReader::RecordReader(std::istream& in, IngestOptions options)
    : in_(in), options_(std::move(options)) {}

RecordReader::RecordReader(std::unique_ptr<std::istream> owned, IngestOptions options)
    : owned_(std::move(owned)), in_(*owned_), options_(std::move(options)) {}

RecordReader::~RecordReader() = default;

std::unique_ptr<RecordReader> RecordReader::open(const std::filesystem::path& path,
                                                 IngestOptions options) {
  if (path == "-") return std::make_unique<RecordReader>(std::cin, std::move(options));
  auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*file) throw IoError(fmt::format("cannot open input '{}'", path.string()));
  return std::unique_ptr<RecordReader>(new RecordReader(std::move(file), std::move(options)));
}

void RecordReader::skip(std::size_t line, std::string reason) {
  ++tally_.skipped_by_reason[reason];
  if (sink_) sink_(Diagnostic{line, std::move(reason)});
}

bool RecordReader::in_range(Instant t) const {
  if (!options_.from && !options_.to) return true;
  const auto local = to_local(t, options_.analysis_offset).date;
  const std::chrono::sys_days day{local};
  if (options_.from && day < std::chrono::sys_days{*options_.from}) return false;
  if (options_.to && day > std::chrono::sys_days{*options_.to}) return false;
  return true;
}

void RecordReader::read_csv_header() {
  header_read_ = true;
  csv_ = std::make_unique<csv::Reader>(in_);
  csv::Record header;
  if (!csv_->next(header)) return;

  if (!header.fields.empty() && header.fields[0].starts_with("\xEF\xBB\xBF")) {
    header.fields[0].erase(0, 3);
  }
  auto find = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
      if (text::trim(header.fields[i]) == name) return i;
    }
    return npos;
  };
  col_id_ = find("id");
  col_created_ = find("created_at");
  col_text_ = find("text");
  col_location_ = find("user_location");
  column_count_ = header.fields.size();
  for (auto [col, name] : {std::pair{col_id_, "id"}, {col_created_, "created_at"},
                           {col_text_, "text"}}) {
    if (col == npos) {
      throw LoadError(fmt::format("CSV header is missing required column '{}'", name));
    }
  }
}

std::optional<RawRecord> RecordReader::next_raw(std::size_t& line, bool& eof) {
  eof = false;
  if (options_.format == InputFormat::jsonl) {
    std::string buf;
    if (!std::getline(in_, buf)) {
      eof = true;
      return std::nullopt;
    }
    line = ++physical_line_;
    if (!buf.empty() && buf.back() == '\r') buf.pop_back();
    if (line == 1 && buf.starts_with("\xEF\xBB\xBF")) buf.erase(0, 3);
    if (is_blank_line(buf)) {
      return blank_marker();
    }
    return parse_jsonl_line(buf);
  }

  if (!header_read_) read_csv_header();
  csv::Record rec;
  if (!csv_->next(rec)) {
    eof = true;
    return std::nullopt;
  }
  line = rec.line;
  if (rec.fields.size() == 1 && is_blank_line(rec.fields[0])) {
    return blank_marker();
  }
  if (!rec.well_formed || rec.fields.size() != column_count_) return std::nullopt;

  RawRecord raw;
  raw.id = rec.fields[col_id_];
  raw.created_at = rec.fields[col_created_];
  raw.text = rec.fields[col_text_];
  if (col_location_ != npos) raw.user_location = rec.fields[col_location_];
  return raw;
}

std::optional<TweetRecord> RecordReader::next() {
  for (;;) {
    std::size_t line = 0;
    bool eof = false;
    auto raw = next_raw(line, eof);
    if (eof) return std::nullopt;
    ++tally_.lines;

    if (!raw) {
      skip(line, "malformed");
      continue;
    }
    if (has(raw->type_errors, "blank")) {
      skip(line, "blank_line");
      continue;
    }
    auto validated = validate_record(*raw, options_.default_offset);
    if (auto* rej = std::get_if<Rejection>(&validated)) {
      skip(line, std::move(rej->reason));
      continue;
    }
    auto& rec = std::get<TweetRecord>(validated);
    if (!seen_ids_.insert(rec.id).second) {
      skip(line, "duplicate");
      continue;
    }
    if (!in_range(rec.created_at)) {
      skip(line, "out_of_range");
      continue;
    }
    ++tally_.accepted;
    return std::move(rec);
  }
}

ReadResult read_records(std::istream& in, IngestOptions options) {
  ReadResult result;
  RecordReader reader(in, std::move(options));
  reader.set_diagnostic_sink([&](const Diagnostic& d) { result.diagnostics.push_back(d); });
  while (auto rec = reader.next()) result.records.push_back(std::move(*rec));
  result.tally = reader.tally();
  return result;
}

ReadResult read_records(const std::filesystem::path& path, IngestOptions options) {
  ReadResult result;
  auto reader = RecordReader::open(path, std::move(options));
  reader->set_diagnostic_sink([&](const Diagnostic& d) { result.diagnostics.push_back(d); });
  while (auto rec = reader->next()) result.records.push_back(std::move(*rec));
  result.tally = reader->tally();
  return result;
}

}  // namespace tweetlex
