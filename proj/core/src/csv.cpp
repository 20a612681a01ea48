#include "tweetlex/csv.hpp"

#include <sstream>

namespace tweetlex::csv {

namespace {

void drop_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

bool Reader::next(Record& out) {
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_;
  drop_cr(line);

  out.fields.clear();
  out.line = line_;
  out.well_formed = true;

  std::string field;
  bool quoted = false;    // inside a quoted section
  bool was_quoted = false;
  std::size_t i = 0;
  for (;;) {
    if (i == line.size()) {
      if (!quoted) break;
      // Quoted field continues on the next physical line.
      std::string more;
      if (!std::getline(in_, more)) {
        out.well_formed = false;
        break;
      }
      ++line_;
      drop_cr(more);
      field.push_back('\n');
      line = std::move(more);
      i = 0;
      continue;
    }
    const char c = line[i++];
    if (quoted) {
      if (c == '"') {
        if (i < line.size() && line[i] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == ',') {
      out.fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '"') {
      if (!field.empty() || was_quoted) out.well_formed = false;
      quoted = true;
      was_quoted = true;
    } else {
      if (was_quoted) out.well_formed = false;
      field.push_back(c);
    }
  }
  out.fields.push_back(std::move(field));
  return true;
}

Record parse_line(std::string_view line) {
  std::string copy(line);
  std::istringstream in(copy);
  Reader reader(in);
  Record r;
  if (!reader.next(r)) r.fields.push_back({});
  return r;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace tweetlex::csv
