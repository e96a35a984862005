#include "farey/csv.hpp"

#include <cmath>
#include <cstdio>

namespace farey {

std::string format_float(double value) {
  if (value == 0.0) value = 0.0;  // folds -0.0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

CsvWriter::CsvWriter(std::ostream& out, TextFormat format)
    : out_(out), sep_(format == TextFormat::tsv ? '\t' : ',') {}

void CsvWriter::comment(std::string_view text) {
  out_ << "# ";
  for (const char c : text) out_ << (c == '\n' ? ' ' : c);
  out_ << '\n';
}

void CsvWriter::header(std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (const auto c : columns) {
    if (!first) out_ << sep_;
    write_cell(c);
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  bool first = true;
  for (const auto& c : columns) {
    if (!first) out_ << sep_;
    write_cell(c);
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) out_ << sep_;
    write_cell(cells[i]);
  }
  out_ << '\n';
}

void CsvWriter::write_cell(std::string_view text) {
  const bool quote = text.find_first_of(std::string{sep_} + "\"\r\n") != std::string_view::npos;
  if (!quote) {
    out_ << text;
    return;
  }
  out_ << '"';
  for (const char c : text) {
    if (c == '"') out_ << '"';
    out_ << c;
  }
  out_ << '"';
}

}  // namespace farey
