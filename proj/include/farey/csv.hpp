#pragma once

// Minimal delimited-text writer: RFC-4180 style quoting, LF line endings,
// '#' comment lines ahead of the header row.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace farey {

enum class TextFormat { csv, tsv };

// 12 significant digits, "%.12g" style; negative zero prints as 0.
std::string format_float(double value);
// Fixed decimals, e.g. format_fixed(1.49462, 4) == "1.4946"; never "-0.0000".
std::string format_fixed(double value, int decimals);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out, TextFormat format = TextFormat::csv);

  char separator() const { return sep_; }

  void comment(std::string_view text);
  void header(std::initializer_list<std::string_view> columns);
  void header(const std::vector<std::string>& columns);

  // Each cell is already formatted; quoting is applied as needed.
  void row(const std::vector<std::string>& cells);

  static std::string cell(std::int64_t v) { return std::to_string(v); }
  static std::string cell(double v) { return format_float(v); }
  static std::string cell(std::string_view v) { return std::string(v); }

 private:
  void write_cell(std::string_view text);

  std::ostream& out_;
  char sep_;
};

}  // namespace farey
