#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qrb {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Comma separated, 17 significant digits, '\n' line endings, header first.
std::string format_csv(const Table& table);
void emit_csv(const Table& table, const std::filesystem::path& path);

/// Inverse of format_csv. Throws Error(kConfig) on malformed input.
Table parse_csv(std::string_view text);

}  // namespace qrb
