#include "fansub/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include "fansub/errors.hpp"
#include "fansub/reduction.hpp"
#include "fansub/selector.hpp"
#include "fansub/verifier.hpp"

namespace fansub {

namespace {

double axis_value(const GridAxis& ax, int i) {
  return ax.low + (ax.high - ax.low) * (static_cast<double>(i) / (ax.count - 1));
}

void validate_grid(const GridSpec& grid, double b, double rho0) {
  std::vector<std::string> bad;
  if (grid.a_axis.count < 2 || grid.eps_axis.count < 2)
    bad.push_back("axis counts must be >= 2");
  if (!(0.0 < grid.a_axis.low && grid.a_axis.low < grid.a_axis.high &&
        grid.a_axis.high < b))
    bad.push_back("a range must satisfy 0 < low < high < b");
  if (!(0.0 < grid.eps_axis.low && grid.eps_axis.low < grid.eps_axis.high &&
        grid.eps_axis.high < rho0))
    bad.push_back("eps range must satisfy 0 < low < high < rho0");
  const std::size_t cells = static_cast<std::size_t>(grid.a_axis.count) *
                            static_cast<std::size_t>(grid.eps_axis.count);
  if (cells > grid.cap)
    bad.push_back("grid of " + std::to_string(cells) + " cells exceeds the cap of " +
                  std::to_string(grid.cap));
  if (!bad.empty()) {
    std::string msg = "invalid scan grid:";
    for (const std::string& m : bad) msg += " " + m + ";";
    throw ConfigError(msg, bad);
  }
}

}  // namespace

GridSpec default_grid(const SymmetricContactDatum& datum, const PressureLaw& law) {
  const double b = choose_b(law, datum.rho0);
  GridSpec grid;
  grid.a_axis = {0.02 * b, 0.98 * b, 50};
  grid.eps_axis = {0.01 * datum.rho0, 0.99 * datum.rho0, 40};
  return grid;
}

CellResult evaluate_cell(const SymmetricContactDatum& datum, const PressureLaw& law,
                         const PotentialContext& ctx, double b, double a,
                         double eps) {
  CellResult cell;
  cell.a = a;
  cell.eps = eps;
  const double nan = std::nan("");
  cell.min_slack = nan;
  cell.slack_epsilon = cell.slack_a1 = cell.slack_a2 = cell.slack_a3 = nan;
  cell.slack_en = cell.slack_tr1 = cell.slack_det1 = cell.slack_tr2 =
      cell.slack_det2 = nan;

  const double rho0 = datum.rho0;
  const double u0 = datum.u0;

  try {
    const double p0 = law.p(rho0);
    const double P0 = law.potential(rho0, ctx);
    const double dp0 = law.dp(rho0);
    const double dP0 = law.dpotential(rho0, ctx);
    const double p_minus = law.p(rho0 - eps);
    const double P_minus = law.potential(rho0 - eps, ctx);

    cell.slack_epsilon =
        0.5 * rho0 * u0 * u0 -
        (eps * (u0 * u0 + 2.0 * dP0 + 3.0) + 2.0 * P_minus - p_minus - 2.0 * P0 + p0);

    const double delta = a * eps / (b - a);
    const double rho1 = rho0 + delta;
    const double p1 = law.p(rho1);
    const double P1 = law.potential(rho1, ctx);

    cell.slack_a1 =
        (2.0 * dP0 - dp0 + 1.0) - ((2.0 * P1 - 2.0 * P0) / delta - (p1 - p0) / delta);
    cell.slack_a2 = (dp0 + 1.0) - ((p1 - p0) / delta) * (1.0 + delta / rho0);
    cell.slack_a3 = (a * b * eps - 0.5 * rho0 * u0 * u0) * (-a * b * eps - p0 + p_minus) -
                    (a * u0 * (rho0 - eps)) * (a * u0 * (rho0 - eps));

    SymmetricParameters params;
    params.a = a;
    params.b = b;
    params.rho1 = rho1;
    params.m11 = -rho1 * u0;
    params.q1 = (rho1 * u0 * u0 + delta * (b * b + 1.0) + p0 + p1) / 2.0;
    params.q2 = (p0 + p_minus + 0.5 * rho0 * u0 * u0) / 2.0;

    const FanSubsolution sub = reduce(params, datum, law, ctx);
    const double rho2 = sub.interior[1].rho;
    const double p2 = law.p(rho2);
    const double P2 = law.potential(rho2, ctx);

    cell.slack_en = a * (params.q1 + P1 - p1 - params.q2 - P2 + p2) -
                    b * (params.q1 + P1 - p1 - 0.5 * rho0 * u0 * u0 - P0);
    cell.slack_tr1 =
        -(rho1 * u0 * u0 + b * b * delta * delta / rho1 + 2.0 * (p1 - params.q1));
    cell.slack_det1 = (rho1 * u0 * u0 + b * b * delta + p0 + p1 - 2.0 * params.q1) *
                      (-b * b * delta * rho0 / rho1 - p0 + p1);
    cell.slack_tr2 = params.q2 - p2;
    const double cross = (b * rho0 - (b - a) * rho1) * u0;
    cell.slack_det2 = (b * (b - a) * delta + p0 + p2 - 2.0 * params.q2) *
                          (-b * (b - a) * delta - p0 + p2) -
                      cross * cross;

    const VerificationReport report = verify(Candidate::from(sub), law, ctx, {}, datum);
    cell.verify_all_pass = report.all_pass;

    const double slacks[] = {cell.slack_epsilon, cell.slack_a1, cell.slack_a2,
                             cell.slack_a3,      cell.slack_en, cell.slack_tr1,
                             cell.slack_det1,    cell.slack_tr2, cell.slack_det2};
    cell.min_slack = *std::min_element(std::begin(slacks), std::end(slacks));
    cell.feasible = cell.verify_all_pass &&
                    std::all_of(std::begin(slacks), std::end(slacks),
                                [](double s) { return s > 0.0; });
  } catch (const Error&) {
    // Out-of-hull evaluation or a non-positive derived density: the cell is
    // infeasible, with NaN recorded for whatever could not be evaluated.
    cell.feasible = false;
    cell.verify_all_pass = false;
  }
  return cell;
}

FeasibilityTable scan_feasibility(const SymmetricContactDatum& datum,
                                  const PressureLaw& law,
                                  const PotentialContext& ctx,
                                  const GridSpec& grid, bool parallel) {
  if (!datum.valid())
    throw DomainError("contact datum requires rho0 > 0 and u0 != 0");
  const double b = choose_b(law, datum.rho0);
  validate_grid(grid, b, datum.rho0);

  FeasibilityTable table;
  table.datum = datum;
  table.law = law.describe();
  table.rho_star = ctx.rho_star;
  table.b = b;
  table.grid = grid;
  const int na = grid.a_axis.count;
  const int ne = grid.eps_axis.count;
  table.cells.resize(static_cast<std::size_t>(na) * ne);

  auto run_rows = [&](int ia_begin, int ia_end) {
    for (int ia = ia_begin; ia < ia_end; ++ia) {
      const double a = axis_value(grid.a_axis, ia);
      for (int ie = 0; ie < ne; ++ie) {
        const double eps = axis_value(grid.eps_axis, ie);
        table.cells[static_cast<std::size_t>(ia) * ne + ie] =
            evaluate_cell(datum, law, ctx, b, a, eps);
      }
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = parallel ? std::max(1, std::min<int>(hw ? hw : 1, na)) : 1;
  if (workers == 1) {
    run_rows(0, na);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (na + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(na, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_rows, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return table;
}

void emit_csv(const FeasibilityTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open CSV output: " + path.string());
  out << "a,eps,feasible,min_slack,slack_epsilon,slack_a1,slack_a2,slack_a3,"
         "slack_en,slack_tr1,slack_det1,slack_tr2,slack_det2\n";
  char buf[512];
  for (const CellResult& c : table.cells) {
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g\n",
                  c.a, c.eps, c.feasible ? 1 : 0, c.min_slack, c.slack_epsilon,
                  c.slack_a1, c.slack_a2, c.slack_a3, c.slack_en, c.slack_tr1,
                  c.slack_det1, c.slack_tr2, c.slack_det2);
    out << buf;
  }
  if (!out) throw IoError("failed writing CSV output: " + path.string());
}

namespace {

struct Rgb {
  int r, g, b;
};

Rgb cell_color(double min_slack, double scale) {
  if (std::isnan(min_slack)) return {200, 200, 200};
  const double t =
      scale > 0.0 ? std::sqrt(std::min(1.0, std::abs(min_slack) / scale)) : 0.0;
  const Rgb from{255, 255, 255};
  const Rgb to = min_slack >= 0.0 ? Rgb{26, 152, 80} : Rgb{215, 48, 39};
  auto mix = [&](int x, int y) { return static_cast<int>(std::lround(x + (y - x) * t)); };
  return {mix(from.r, to.r), mix(from.g, to.g), mix(from.b, to.b)};
}

}  // namespace

void emit_heatmap(const FeasibilityTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open SVG output: " + path.string());

  const int na = table.grid.a_axis.count;
  const int ne = table.grid.eps_axis.count;
  const double left = 80.0, top = 40.0, plot_w = 640.0, plot_h = 420.0;
  const double width = left + plot_w + 30.0;
  const double height = top + plot_h + 70.0;
  const double cw = plot_w / na;
  const double ch = plot_h / ne;

  double scale = 0.0;
  for (const CellResult& c : table.cells)
    if (std::isfinite(c.min_slack)) scale = std::max(scale, std::abs(c.min_slack));

  char buf[512];
  auto emitf = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out << buf;
  };

  emitf("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
        "viewBox=\"0 0 %.0f %.0f\">\n",
        width, height, width, height);
  emitf("<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n",
        width, height);
  emitf("<text x=\"%.2f\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">"
        "feasibility of the symmetric five-region construction, %s, rho0=%g, u0=%g"
        "</text>\n",
        left, table.law.c_str(), table.datum.rho0, table.datum.u0);

  for (int ia = 0; ia < na; ++ia) {
    for (int ie = 0; ie < ne; ++ie) {
      const CellResult& c = table.cells[static_cast<std::size_t>(ia) * ne + ie];
      const Rgb rgb = cell_color(c.min_slack, scale);
      const double x = left + ia * cw;
      const double y = top + (ne - 1 - ie) * ch;
      emitf("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
            "fill=\"#%02x%02x%02x\"/>\n",
            x, y, cw + 0.5, ch + 0.5, rgb.r, rgb.g, rgb.b);
    }
  }

  // Axes with min/mid/max tick labels.
  emitf("<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        left, top, plot_w, plot_h);
  const GridAxis& ax = table.grid.a_axis;
  const GridAxis& ex = table.grid.eps_axis;
  for (int k = 0; k <= 2; ++k) {
    const double fa = k / 2.0;
    emitf("<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"middle\">%.4g</text>\n",
          left + fa * plot_w, top + plot_h + 18.0, ax.low + fa * (ax.high - ax.low));
    emitf("<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"end\">%.4g</text>\n",
          left - 6.0, top + plot_h - fa * plot_h + 4.0,
          ex.low + fa * (ex.high - ex.low));
  }
  emitf("<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\">a</text>\n",
        left + plot_w / 2.0, top + plot_h + 40.0);
  emitf("<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\" transform=\"rotate(-90 %.2f %.2f)\">eps</text>\n",
        left - 50.0, top + plot_h / 2.0, left - 50.0, top + plot_h / 2.0);
  emitf("<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\">"
        "green: all conditions satisfied (min slack &gt; 0); red: violated; "
        "intensity: |min slack|</text>\n",
        left, top + plot_h + 58.0);
  out << "</svg>\n";
  if (!out) throw IoError("failed writing SVG output: " + path.string());
}

}  // namespace fansub
