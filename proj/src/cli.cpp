#include "lmcost/cli.hpp"

#include "lmcost/comparative.hpp"
#include "lmcost/cost_model.hpp"
#include "lmcost/crossing_probs.hpp"
#include "lmcost/csv.hpp"
#include "lmcost/errors.hpp"
#include "lmcost/mc_validation.hpp"
#include "lmcost/valley_analysis.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace lmcost::cli {
namespace {

using csv::Cell;
using csv::Table;

struct Flags {
  std::string dist;
  double cmr = 0.0;
  int nmax = 20;
  int dim = 1;
  double r = 0.0;
  double p = 0.0;
  double lambda = 1.0;
  double t_start = 0.01;
  double t_end = 10.0;
  int steps = 200;
  double window = kDefaultSearchWindow;
  std::uint64_t calls = 1'000'000;
  std::uint64_t seed = 42;
  int id = 0;
  std::string format = "csv";
  std::string out;
};

ResidenceKind kind_of(const std::string& name) {
  const auto kind = parse_residence_kind(name);
  if (!kind) throw InvalidParameter("unknown residence distribution '" + name + "'");
  return *kind;
}

std::string fmt(double v) { return csv::format_number(v); }

Table probs_table(const Flags& f) {
  const ResidenceModel model{kind_of(f.dist), f.cmr / f.lambda};
  const CrossingDistribution dist = crossing_distribution(model, CallModel{f.lambda}, f.nmax);
  Table table({"n", "p_cross"});
  table.comment("dist=" + std::string(to_string(model.kind)) + " cmr=" + fmt(f.cmr) +
                " lambda=" + fmt(f.lambda));
  double total = dist.tail_mass;
  for (int n = 0; n <= dist.n_max; ++n) {
    table.add_row({static_cast<double>(n), dist.probs[static_cast<std::size_t>(n)]});
    total += dist.probs[static_cast<std::size_t>(n)];
  }
  table.footer("tail_mass=" + csv::format_number(dist.tail_mass, 12) +
               " total=" + csv::format_number(total, 15));
  return table;
}

Table threshold_table(const Flags& f) {
  std::vector<ResidenceKind> kinds;
  if (f.dist.empty()) {
    kinds = {ResidenceKind::exponential, ResidenceKind::constant, ResidenceKind::uniform};
  } else {
    kinds = {kind_of(f.dist)};
  }
  const double cmr = f.cmr > 0.0 ? f.cmr : 0.7;
  Table table({"dist", "equal_cmr", "cmr", "p0", "p1", "ratio"});
  for (ResidenceKind kind : kinds) {
    const ResidenceModel model{kind, 1.0};
    const std::optional<Cmr> root = equal_crossing_cmr(model);
    const CrossingGap gap = p0_p1_gap(model, Cmr{cmr});
    std::optional<double> root_value;
    if (root) root_value = root->value;
    table.add_row({std::string(to_string(kind)), root_value, cmr, gap.p0, gap.p1, gap.ratio});
  }
  return table;
}

CostParams cost_params(const Flags& f) {
  CostParams params{f.dim, f.r, f.p, f.lambda};
  params.validate();
  return params;
}

Table curve_table(const Flags& f) {
  const CostCurve curve = cost_curve(cost_params(f), f.t_start, f.t_end, f.steps);
  Table table({"t", "eta"});
  table.comment("dim=" + std::to_string(f.dim) + " r=" + fmt(f.r) + " p=" + fmt(f.p) +
                " lambda=" + fmt(f.lambda) + " sv=" + fmt(curve.sv));
  for (std::size_t i = 0; i < curve.times.size(); ++i) table.add_row({curve.times[i], curve.values[i]});
  return table;
}

std::vector<Cell> valley_cells(const ValleyProfile& v) {
  std::optional<double> t_min;
  if (!v.censored_t_min) t_min = v.t_min;
  return {v.sv, t_min, v.minimum, v.depth, v.p_m, v.t90, v.t98, v.censored_t_min};
}

Table valley_table_cmd(const Flags& f) {
  const CostParams params = cost_params(f);
  const ValleyProfile v = characterize_valley(params, f.window);
  Table table({"dim", "r", "p", "sv", "t_min", "minimum", "depth", "p_m", "t90", "t98", "censored"});
  std::vector<Cell> row{static_cast<double>(f.dim), f.r, f.p};
  for (Cell& c : valley_cells(v)) row.push_back(std::move(c));
  table.add_row(std::move(row));
  return table;
}

Table ratio_table_cmd(const Flags& f, bool windowed) {
  if (!(f.r > 0.0) || !(f.p > 0.0)) throw InvalidParameter("--r and --p must be > 0");
  const RatioRow row = windowed ? windowed_minima_ratio(f.r, f.p, f.lambda, f.window)
                                : minima_ratio(f.r, f.p, f.lambda);
  Table table({"r", "p", "min1d", "min2d", "ratio", "sv_ratio", "window", "boundary"});
  table.add_row({row.r, row.p_page, row.min_1d, row.min_2d, row.ratio, sv_ratio(row.r), row.window,
                 row.boundary_1d || row.boundary_2d});
  return table;
}

Table table_cmd(int id) {
  if (!is_table_id(id)) throw InvalidParameter("table id must be in 1..11");

  if (id <= 6) {
    const ValleyTable vt = valley_table(id);
    Table table({"r", "sv", "minimum", "depth", "p_m", "t90", "paper_sv", "paper_minimum",
                 "paper_depth", "paper_p_m", "paper_t90"});
    table.comment("table " + std::to_string(id) + ": dim=1 p=" + fmt(vt.info.p_page));
    if (vt.info.caption_anomaly) table.comment("caption-anomaly: values consistent with P=0.9");
    for (const ValleyTableRow& row : vt.rows) {
      const ValleyProfile& v = row.computed;
      const reference::ValleyRow& ref = row.published;
      table.add_row({ref.r, v.sv, v.minimum, v.depth, v.p_m, v.t90, ref.sv, ref.minimum, ref.depth,
                     ref.p_m, ref.t90});
    }
    return table;
  }
  if (id == 7) {
    Table table({"p", "dim", "r", "t98", "paper_value"});
    table.comment("table 7: settling time into the +/-2% band around sv");
    for (const SettleTableRow& row : settle_table()) {
      const auto& c = row.published;
      table.add_row({c.p_page, static_cast<double>(c.dimension), c.r, row.t98, c.t98});
    }
    return table;
  }
  if (id == 8) {
    Table table({"p", "dim", "r", "tmin", "censored", "paper_value"});
    table.comment("table 8: minimizing timeout, search window " + fmt(reference::kTminTableWindow));
    for (const TminTableRow& row : tmin_table()) {
      const auto& c = row.published;
      std::optional<double> tmin;
      if (!row.computed.censored) tmin = row.computed.t;
      const std::string published =
          c.t_min ? fmt(*c.t_min) : ">" + fmt(reference::kTminTableWindow);
      table.add_row({c.p_page, static_cast<double>(c.dimension), c.r, tmin, row.computed.censored,
                     published});
    }
    return table;
  }
  if (id == 9) {
    Table table({"r", "p", "ratio", "ratio_window10", "paper_value"});
    table.comment("table 9: ratio of 2D to 1D minima; unwindowed (t <= 50) and windowed (t <= 10)");
    for (const RatioGridRow& row : ratio_grid_table()) {
      table.add_row({row.unwindowed.r, row.unwindowed.p_page, row.unwindowed.ratio,
                     row.windowed.ratio, row.published});
    }
    return table;
  }
  Table table({"p", "r", "min2d", "min1d", "ratio", "paper_min2d", "paper_min1d", "paper_value"});
  table.comment(id == 10 ? "table 10: unwindowed minima, r > 500"
                         : "table 11: minima within a window of 10 time units, r < 1");
  double block = -1.0;
  for (const RatioBlockTableRow& row : ratio_block_table(id)) {
    const RatioRow& c = row.computed;
    if (c.p_page != block) {
      block = c.p_page;
      table.comment("block P=" + fmt(block));
    }
    table.add_row({c.p_page, c.r, c.min_2d, c.min_1d, c.ratio, row.published_min_2d,
                   row.published_min_1d, row.published_ratio});
  }
  return table;
}

Table curves_figure(const std::string& title, const std::vector<int>& dims,
                    const std::vector<double>& rs, double p, double t_start, double t_end,
                    int steps) {
  Table table({"dim", "r", "p", "t", "eta"});
  table.comment(title);
  for (int dim : dims) {
    for (double r : rs) {
      const CostCurve curve = cost_curve(CostParams{dim, r, p, 1.0}, t_start, t_end, steps);
      for (std::size_t i = 0; i < curve.times.size(); ++i) {
        table.add_row({static_cast<double>(dim), r, p, curve.times[i], curve.values[i]});
      }
    }
  }
  return table;
}

Table figure_cmd(const Flags& f, bool t_end_given) {
  switch (f.id) {
  case 1:
  case 2: {
    const double cmr = f.id == 1 ? 0.1 : 2.0;
    Table table({"n", "p_exp", "p_const", "p_uniform"});
    table.comment("figure " + std::to_string(f.id) + ": crossing probabilities at CMR=" + fmt(cmr));
    const CallModel call{1.0};
    std::vector<CrossingDistribution> dists;
    for (ResidenceKind kind :
         {ResidenceKind::exponential, ResidenceKind::constant, ResidenceKind::uniform}) {
      dists.push_back(crossing_distribution(ResidenceModel{kind, cmr}, call, f.nmax));
    }
    for (int n = 0; n <= f.nmax; ++n) {
      const auto i = static_cast<std::size_t>(n);
      table.add_row({static_cast<double>(n), dists[0].probs[i], dists[1].probs[i], dists[2].probs[i]});
    }
    return table;
  }
  case 3:
    return curves_figure("figure 3: 1D cost, P=0.2", {1},
                         {150, 500, 1000, 2500, 5000, 7500, 10000, 15000, 50000}, 0.2, f.t_start,
                         f.t_end, f.steps);
  case 4: {
    const CostParams params{1, 10000, 0.1, 1.0};
    const ValleyProfile v = characterize_valley(params);
    Table table({"metric", "value"});
    table.comment("figure 4: valley metrics for dim=1 r=10000 p=0.1");
    table.add_row({std::string("sv"), v.sv});
    table.add_row({std::string("t_min"), v.t_min});
    table.add_row({std::string("minimum"), v.minimum});
    table.add_row({std::string("depth"), v.depth});
    table.add_row({std::string("p_m"), v.p_m});
    table.add_row({std::string("t90"), v.t90});
    table.add_row({std::string("t98"), v.t98});
    return table;
  }
  case 5:
  case 6:
    return curves_figure("figure " + std::to_string(f.id) + ": 1D vs 2D cost, P=0.1", {1, 2},
                         {14, 1400, 14000}, 0.1, f.t_start,
                         (f.id == 6 && !t_end_given) ? 2.0 : f.t_end, f.steps);
  case 7:
    return curves_figure("figure 7: 1D vs 2D cost at low r, P=0.1", {1, 2}, {1.4, 2, 4, 6, 8},
                         0.1, f.t_start, f.t_end, f.steps);
  default:
    throw InvalidParameter("figure id must be in 1..7");
  }
}

Table simulate_cmd(const Flags& f) {
  McConfig config;
  config.model = ResidenceModel{kind_of(f.dist), f.cmr / f.lambda};
  config.lambda_p = f.lambda;
  config.n_calls = f.calls;
  config.seed = f.seed;
  config.n_max = f.nmax;
  config.validate();

  const McEstimate est = simulate_crossings(config);
  const EstimateComparison cmp =
      compare_estimates(est, config.model, CallModel{config.lambda_p});
  Table table({"n", "freq", "stderr", "analytic", "z"});
  table.comment("dist=" + std::string(to_string(config.model.kind)) + " cmr=" + fmt(f.cmr) +
                " calls=" + std::to_string(f.calls) + " seed=" + std::to_string(f.seed) +
                " rng=mt19937_64");
  for (std::size_t i = 0; i < est.freq.size(); ++i) {
    table.add_row({static_cast<double>(i), est.freq[i], est.std_error[i], cmp.expected[i], cmp.z[i]});
  }
  table.footer("tail_freq=" + fmt(est.tail_freq) + " chi_square=" + fmt(cmp.chi_square) +
               " dof=" + std::to_string(cmp.dof) + " p_value=" + fmt(cmp.p_value) +
               " max_abs_z=" + fmt(cmp.max_abs_z));
  return table;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Timer-based location management cost toolkit", "lmcost"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "tsv"}));
  app.add_option("--out", f.out, "Write data to this file instead of standard output");

  const auto dists = CLI::IsMember({"exp", "exponential", "const", "constant", "uniform"});
  auto add_cost_flags = [&](CLI::App* sub) {
    sub->add_option("--dim", f.dim, "Movement dimension")->check(CLI::IsMember({1, 2}));
    sub->add_option("--r", f.r, "Mobility index")->required()->check(CLI::PositiveNumber);
    sub->add_option("--p", f.p, "Paging cost per Location Area")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", f.lambda, "Call arrival rate")->check(CLI::PositiveNumber);
  };
  auto add_grid_flags = [&](CLI::App* sub) {
    sub->add_option("--t-start", f.t_start, "First timeout of the grid")->check(CLI::PositiveNumber);
    sub->add_option("--t-end", f.t_end, "Last timeout of the grid")->check(CLI::PositiveNumber);
    sub->add_option("--steps", f.steps, "Grid points")->check(CLI::Range(2, 1'000'000));
  };

  CLI::App* probs = app.add_subcommand("probs", "Crossing probabilities P(N) for N = 0..nmax");
  probs->add_option("--dist", f.dist, "Residence distribution")->required()->check(dists);
  probs->add_option("--cmr", f.cmr, "Call-to-mobility ratio")->required()->check(CLI::PositiveNumber);
  probs->add_option("--nmax", f.nmax, "Largest N listed")->check(CLI::Range(1, 100'000));
  probs->add_option("--lambda", f.lambda, "Call arrival rate")->check(CLI::PositiveNumber);

  CLI::App* threshold = app.add_subcommand("threshold", "CMR where P(0) = P(1), and the gap at --cmr");
  threshold->add_option("--dist", f.dist, "Residence distribution (default: all)")->check(dists);
  threshold->add_option("--cmr", f.cmr, "CMR for the gap (default 0.7)")->check(CLI::PositiveNumber);

  CLI::App* curve = app.add_subcommand("curve", "Cost rate over a log-spaced timeout grid");
  add_cost_flags(curve);
  add_grid_flags(curve);

  CLI::App* valley = app.add_subcommand("valley", "Valley metrics of one cost curve");
  add_cost_flags(valley);
  valley->add_option("--window", f.window, "Search bound for the minimum")->check(CLI::PositiveNumber);

  CLI::App* ratio = app.add_subcommand("ratio", "Ratio of 2D to 1D minima");
  ratio->add_option("--r", f.r, "Mobility index")->required()->check(CLI::PositiveNumber);
  ratio->add_option("--p", f.p, "Paging cost per Location Area")->required()->check(CLI::PositiveNumber);
  ratio->add_option("--lambda", f.lambda, "Call arrival rate")->check(CLI::PositiveNumber);
  CLI::Option* ratio_window =
      ratio->add_option("--window", f.window, "Restrict minima to (0, window]")->check(CLI::PositiveNumber);

  CLI::App* table = app.add_subcommand("table", "Reproduce a published table");
  table->add_option("--id", f.id, "Table number")->required()->check(CLI::Range(1, 11));

  CLI::App* figure = app.add_subcommand("figure", "Data behind a published figure");
  figure->add_option("--id", f.id, "Figure number")->required()->check(CLI::Range(1, 7));
  figure->add_option("--nmax", f.nmax, "Largest N (figures 1-2)")->check(CLI::Range(1, 100'000));
  add_grid_flags(figure);
  CLI::Option* figure_t_end = figure->get_option("--t-end");

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo crossing frequencies");
  simulate->add_option("--dist", f.dist, "Residence distribution")->required()->check(dists);
  simulate->add_option("--cmr", f.cmr, "Call-to-mobility ratio")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--calls", f.calls, "Call intervals sampled")
      ->check(CLI::Range(kMinMcCalls, std::uint64_t{1'000'000'000}));
  simulate->add_option("--seed", f.seed, "RNG seed");
  simulate->add_option("--nmax", f.nmax, "Largest N tallied")->check(CLI::Range(1, 100'000));
  simulate->add_option("--lambda", f.lambda, "Call arrival rate")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lmcost: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  if (simulate->parsed() && !simulate->get_option("--nmax")->count()) f.nmax = 10;

  try {
    Table result({""});
    if (probs->parsed()) result = probs_table(f);
    else if (threshold->parsed()) result = threshold_table(f);
    else if (curve->parsed()) result = curve_table(f);
    else if (valley->parsed()) result = valley_table_cmd(f);
    else if (ratio->parsed()) result = ratio_table_cmd(f, ratio_window->count() > 0);
    else if (table->parsed()) result = table_cmd(f.id);
    else if (figure->parsed()) result = figure_cmd(f, figure_t_end->count() > 0);
    else if (simulate->parsed()) result = simulate_cmd(f);

    const char separator = f.format == "tsv" ? '\t' : ',';
    if (f.out.empty()) {
      result.write(out, separator);
    } else {
      std::ostringstream buffer;
      result.write(buffer, separator);
      std::ofstream file(f.out, std::ios::binary);
      if (!file) {
        err << "lmcost: cannot open '" << f.out << "' for writing\n";
        return kExitInvalidArguments;
      }
      file << buffer.str();
    }
  } catch (const NumericalFailure& e) {
    err << "lmcost: numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const InvalidParameter& e) {
    err << "lmcost: invalid argument: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const DomainError& e) {
    err << "lmcost: invalid argument: " << e.what() << '\n';
    return kExitInvalidArguments;
  }
  return kExitOk;
}

} // namespace lmcost::cli
