#include "lmcost/comparative.hpp"

#include "lmcost/errors.hpp"

#include <cmath>
#include <numbers>

namespace lmcost {

namespace {

CostParams params_for(int dimension, double r, double p_page, double lambda_p) {
  CostParams params{dimension, r, p_page, lambda_p};
  params.validate();
  return params;
}

RatioRow make_ratio(double r, double p_page, double lambda_p, std::optional<double> window) {
  const CostParams one = params_for(1, r, p_page, lambda_p);
  const CostParams two = params_for(2, r, p_page, lambda_p);
  const double t_max = window.value_or(kDefaultSearchWindow);
  const WindowedMinimum m1 = windowed_minimum(one, t_max);
  const WindowedMinimum m2 = windowed_minimum(two, t_max);

  RatioRow row;
  row.r = r;
  row.p_page = p_page;
  row.min_1d = m1.value;
  row.min_2d = m2.value;
  row.ratio = m2.value / m1.value;
  row.window = window;
  row.boundary_1d = m1.at_boundary;
  row.boundary_2d = m2.at_boundary;
  return row;
}

} // namespace

RatioRow minima_ratio(double r, double p_page, double lambda_p) {
  return make_ratio(r, p_page, lambda_p, std::nullopt);
}

RatioRow windowed_minima_ratio(double r, double p_page, double lambda_p, double window) {
  if (!(window > 0.0) || !std::isfinite(window)) throw InvalidParameter("window must be > 0");
  return make_ratio(r, p_page, lambda_p, window);
}

double sv_ratio(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidParameter("mobility index must be > 0");
  return std::numbers::pi * std::sqrt(r);
}

std::vector<ValleyProfile> sweep_valleys(int dimension, double p_page, std::span<const double> rs,
                                         double lambda_p) {
  std::vector<ValleyProfile> out;
  out.reserve(rs.size());
  for (double r : rs) out.push_back(characterize_valley(params_for(dimension, r, p_page, lambda_p)));
  return out;
}

std::vector<RatioRow> sweep_ratios(std::span<const double> rs, std::span<const double> ps,
                                   std::optional<double> window, double lambda_p) {
  std::vector<RatioRow> out;
  out.reserve(rs.size() * ps.size());
  for (double r : rs) {
    for (double p : ps) out.push_back(make_ratio(r, p, lambda_p, window));
  }
  return out;
}

ValleyTable valley_table(int id) {
  ValleyTable table{reference::valley_table(id), {}};
  for (const reference::ValleyRow& row : table.info.rows) {
    table.rows.push_back({characterize_valley(params_for(1, row.r, table.info.p_page, 1.0)), row});
  }
  return table;
}

std::vector<SettleTableRow> settle_table() {
  std::vector<SettleTableRow> rows;
  for (const reference::SettleCell& cell : reference::settle_cells()) {
    rows.push_back({settle_time(params_for(cell.dimension, cell.r, cell.p_page, 1.0)), cell});
  }
  return rows;
}

std::vector<TminTableRow> tmin_table() {
  std::vector<TminTableRow> rows;
  for (const reference::TminCell& cell : reference::tmin_cells()) {
    rows.push_back({find_minimum(params_for(cell.dimension, cell.r, cell.p_page, 1.0),
                                 reference::kTminTableWindow),
                    cell});
  }
  return rows;
}

std::vector<RatioGridRow> ratio_grid_table() {
  std::vector<RatioGridRow> rows;
  const auto& published = reference::ratio_grid();
  for (std::size_t i = 0; i < reference::kRatioGridR.size(); ++i) {
    for (std::size_t j = 0; j < reference::kRatioGridP.size(); ++j) {
      const double r = reference::kRatioGridR[i];
      const double p = reference::kRatioGridP[j];
      rows.push_back({minima_ratio(r, p), windowed_minima_ratio(r, p, 1.0, 10.0), published[i][j]});
    }
  }
  return rows;
}

std::vector<RatioBlockTableRow> ratio_block_table(int id) {
  const auto published = reference::ratio_block(id);
  std::optional<double> window;
  if (id == 11) window = reference::kRatioBlockWindow;

  std::vector<RatioBlockTableRow> rows;
  for (double p : {0.1, 0.3}) {
    for (const reference::RatioBlockRow& ref : published) {
      RatioBlockTableRow row;
      row.computed = make_ratio(ref.r, p, 1.0, window);
      const bool low = p < 0.2;
      row.published_min_2d = low ? ref.min2d_p01 : ref.min2d_p03;
      row.published_min_1d = low ? ref.min1d_p01 : ref.min1d_p03;
      row.published_ratio = low ? ref.ratio_p01 : ref.ratio_p03;
      rows.push_back(row);
    }
  }
  return rows;
}

bool is_table_id(int id) { return id >= 1 && id <= 11; }

} // namespace lmcost
