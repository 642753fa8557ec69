#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace paircorr::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string quote_field(const std::string &field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvTable::CsvTable(std::vector<std::string> columns)
    : columns_(std::move(columns)), docs_(columns_.size()) {}

void CsvTable::describe(const std::string &column, const std::string &text) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == column) {
      docs_[i] = text;
      return;
    }
  }
  throw std::logic_error("CsvTable::describe: unknown column " + column);
}

void CsvTable::add_row(const std::vector<double> &row) {
  if (row.size() != columns_.size()) throw std::logic_error("CsvTable: row width mismatch");
  rows_.push_back(row);
}

void CsvTable::write(std::ostream &out) const {
  for (const auto &c : comments_) out << "# " << c << "\r\n";
  out << "# columns:\r\n";
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << "#   " << columns_[i] << ": " << docs_[i] << "\r\n";
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << quote_field(columns_[i]);
  out << "\r\n";
  for (const auto &row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << "\r\n";
  }
}

} // namespace paircorr::cli
