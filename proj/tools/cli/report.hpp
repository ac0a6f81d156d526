#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace rarecase::cli {

using Row = nlohmann::ordered_json;

enum class Format { jsonl, csv };

Format parse_format(const std::string& s);

// Line-oriented report. CSV prints a header whenever the column set changes.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Row& row);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

}  // namespace rarecase::cli
