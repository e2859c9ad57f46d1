#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamfrac::cli {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

/// Numeric CSV: comma separated, LF line endings, empty cell for a missing value.
class CsvTable {
 public:
  using Row = std::vector<std::optional<double>>;

  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(Row row);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  /// Column index by header name; -1 when absent.
  int column(std::string_view name) const;

  std::string to_string() const;
  static CsvTable parse(std::string_view text);

 private:
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

}  // namespace hamfrac::cli
