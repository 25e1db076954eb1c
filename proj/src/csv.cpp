#include "lmcost/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace lmcost::csv {

std::string format_number(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != header_.size()) {
    throw std::logic_error("row width does not match the header");
  }
  lines_.push_back(Line{false, std::move(cells), {}});
}

std::size_t Table::row_count() const {
  std::size_t n = 0;
  for (const Line& line : lines_) n += line.is_comment ? 0 : 1;
  return n;
}

void Table::write(std::ostream& os, char separator, int precision) const {
  auto cell_text = [precision](const Cell& cell) -> std::string {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d, precision);
    if (const auto* o = std::get_if<std::optional<double>>(&cell)) {
      return o->has_value() ? format_number(**o, precision) : std::string{};
    }
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return std::get<std::string>(cell);
  };

  std::size_t first_row = 0;
  while (first_row < lines_.size() && lines_[first_row].is_comment) {
    os << "# " << lines_[first_row].text << '\n';
    ++first_row;
  }
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) os << separator;
    os << header_[i];
  }
  os << '\n';
  for (std::size_t k = first_row; k < lines_.size(); ++k) {
    const Line& line = lines_[k];
    if (line.is_comment) {
      os << "# " << line.text << '\n';
      continue;
    }
    for (std::size_t i = 0; i < line.cells.size(); ++i) {
      if (i) os << separator;
      os << cell_text(line.cells[i]);
    }
    os << '\n';
  }
  for (const std::string& text : footers_) os << "# " << text << '\n';
}

} // namespace lmcost::csv
