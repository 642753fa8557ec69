#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paircorr::cli {

// 17 significant digits, lowercase exponent: round-trips every double and
// never depends on the locale.
std::string format_number(double v);

// RFC 4180 table preceded by '#' comment lines. Rows are written in the
// order they were added; nothing is reordered or reformatted later.
class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> columns);

  void comment(const std::string &line) { comments_.push_back(line); }
  // Column documentation, emitted in the header block as "# name: text".
  void describe(const std::string &column, const std::string &text);
  void add_row(const std::vector<double> &row);

  std::size_t rows() const noexcept { return rows_.size(); }
  void write(std::ostream &out) const;

private:
  std::vector<std::string> columns_;
  std::vector<std::string> docs_;
  std::vector<std::string> comments_;
  std::vector<std::vector<double>> rows_;
};

std::string quote_field(const std::string &field);

} // namespace paircorr::cli
