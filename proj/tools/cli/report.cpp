#include "cli/report.hpp"

#include "rarecase/errors.hpp"

namespace rarecase::cli {

namespace {

std::string csv_field(const Row& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "jsonl") return Format::jsonl;
  if (s == "csv") return Format::csv;
  throw UsageError("unknown format: " + s);
}

void ReportWriter::write(const Row& row) {
  if (format_ == Format::jsonl) {
    out_ << row.dump() << '\n';
    return;
  }
  std::vector<std::string> cols;
  for (const auto& [key, value] : row.items()) cols.push_back(key);
  if (cols != columns_) {
    columns_ = cols;
    for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
    out_ << '\n';
  }
  std::size_t i = 0;
  for (const auto& [key, value] : row.items()) out_ << (i++ ? "," : "") << csv_field(value);
  out_ << '\n';
}

}  // namespace rarecase::cli
