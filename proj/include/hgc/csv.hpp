#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hgc::csv {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_real(double x);

double parse_real(std::string_view text);

std::vector<std::string> split_row(std::string_view line);

/// A parsed CSV file: header plus rows of raw fields.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

/// Reads a comma-separated table. Every row must match the header width.
Table read_table(std::istream& in);
Table read_table_file(const std::string& path);

}  // namespace hgc::csv
