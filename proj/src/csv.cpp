#include "qrb/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qrb/error.hpp"
#include "qrb/render.hpp"

namespace qrb {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::string format_csv(const Table& table) {
  std::string text;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) text += ',';
    text += table.header[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw Error(ErrorCode::kInvalidParameter, "CSV row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_value(row[i]);
    }
    text += '\n';
  }
  return text;
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
  write_file(path, format_csv(table));
}

Table parse_csv(std::string_view text) {
  Table table;
  bool first = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (first) {
      for (const auto f : fields) table.header.emplace_back(f);
      first = false;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::kConfig, "CSV row width does not match the header");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto f : fields) {
      const std::string s(f);
      char* stop = nullptr;
      const double v = std::strtod(s.c_str(), &stop);
      if (s.empty() || stop != s.c_str() + s.size()) {
        throw Error(ErrorCode::kConfig, "bad CSV number '" + s + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (first) throw Error(ErrorCode::kConfig, "CSV has no header line");
  return table;
}

}  // namespace qrb
