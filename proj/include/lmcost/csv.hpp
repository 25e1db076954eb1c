#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lmcost::csv {

inline constexpr int kDefaultPrecision = 6;

/// A cell: number, optional number (empty when absent), flag or text.
using Cell = std::variant<double, std::optional<double>, bool, std::string>;

std::string format_number(double value, int precision = kDefaultPrecision);

/// Comma- or tab-separated table with `#` comment lines. The header is always
/// written, comments before it keep their position relative to the header.
class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void comment(std::string text) { lines_.push_back(Line{true, {}, std::move(text)}); }
  void footer(std::string text) { footers_.push_back(std::move(text)); }
  void add_row(std::vector<Cell> cells);

  std::size_t row_count() const;
  void write(std::ostream& os, char separator, int precision = kDefaultPrecision) const;

private:
  struct Line {
    bool is_comment;
    std::vector<Cell> cells;
    std::string text;
  };
  std::vector<std::string> header_;
  std::vector<Line> lines_;
  std::vector<std::string> footers_;
};

} // namespace lmcost::csv
