#include "fansub/infeasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "fansub/errors.hpp"

namespace fansub {

ContradictionCertificate three_region_certificate(const SymmetricContactDatum& datum,
                                                  const PressureLaw& law) {
  if (!datum.valid())
    throw DomainError("contact datum requires rho0 > 0 and u0 != 0");
  const double p0 = law.p(datum.rho0);

  ContradictionCertificate cert;
  cert.forced = {{"rho1", datum.rho0}, {"[m1]_2", 0.0}, {"[U1]_11 - q1", -p0}};

  // With [U1]_11 - q1 forced to -p(rho0), the second determinant factor is
  // carried as the exact expression (-p0) + p0, so the product is
  // structurally zero for every finite choice of the remaining free values.
  const double forced_u11_minus_q1 = -p0;
  const double second_factor = forced_u11_minus_q1 + p0;
  cert.det_lhs = second_factor;
  cert.det_rhs_lower_bound = 0.0;  // [U1]_12^2 >= 0 for every candidate
  cert.conclusion = "infeasible";
  return cert;
}

namespace {

struct GridIterator {
  const InfeasibilityGrid& grid;
  std::vector<std::size_t> index;

  explicit GridIterator(const InfeasibilityGrid& g) : grid(g), index(g.axes.size(), 0) {}

  std::vector<double> values() const {
    std::vector<double> v(grid.axes.size());
    for (std::size_t k = 0; k < grid.axes.size(); ++k) {
      const AxisSpec& ax = grid.axes[k];
      v[k] = ax.count == 1 ? ax.low
                           : ax.low + (ax.high - ax.low) *
                                          (static_cast<double>(index[k]) /
                                           (ax.count - 1));
    }
    return v;
  }

  bool advance() {
    for (std::size_t k = grid.axes.size(); k-- > 0;) {
      if (++index[k] < static_cast<std::size_t>(grid.axes[k].count)) return true;
      index[k] = 0;
    }
    return false;
  }
};

// Deterministic uniform double in [0, 1) from the raw 64-bit stream so the
// sequence does not depend on the standard library's distribution details.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

InfeasibilityGrid default_infeasibility_grid(int n, const SymmetricContactDatum& datum,
                                             const PressureLaw& law) {
  if (n != 1 && n != 2)
    throw ConfigError("symmetric scan supports n in {1, 2}; use construct for the "
                      "five-region partition");
  const double s = std::sqrt(law.dp(datum.rho0) + 1.0);
  const double qb = 0.5 * datum.rho0 * datum.u0 * datum.u0 + law.p(datum.rho0);

  InfeasibilityGrid grid;
  if (n == 1) {
    grid.axes = {{"a", 0.05 * s, 2.0 * s, 400}, {"q1", 0.25 * qb, 2.0 * qb, 250}};
  } else {
    const double mscale = 2.0 * datum.rho0 * std::abs(datum.u0);
    const double fscale = qb * std::abs(datum.u0);
    grid.axes = {{"c", 0.05 * s, 2.0 * s, 20},
                 {"m11", -mscale, mscale, 25},
                 {"q1", 0.25 * qb, 2.0 * qb, 20},
                 {"f12", -fscale, fscale, 10}};
  }
  return grid;
}

Candidate symmetric_ansatz_candidate(int n, const SymmetricContactDatum& datum,
                                     const PressureLaw& law,
                                     const std::vector<double>& params) {
  const double rho0 = datum.rho0;
  const double u0 = datum.u0;
  const double p0 = law.p(rho0);

  Candidate c;
  c.left = {rho0, {-rho0 * u0, 0.0}};
  c.right = {rho0, {rho0 * u0, 0.0}};

  if (n == 1) {
    // Self-mirrored single region: m1 = 0 and F1 = 0 by symmetry; the jump
    // conditions then force rho1 = rho0, [U1]_12 = -a rho0 u0 and
    // [U1]_11 = q1 - p(rho0). Free: (a, q1).
    const double a = params.at(0);
    const double q1 = params.at(1);
    c.speeds = {-a, a};
    FanState r1;
    r1.rho = rho0;
    r1.m = {0.0, 0.0};
    r1.U = {q1 - p0, -a * rho0 * u0};
    r1.q = q1;
    r1.F = {0.0, 0.0};
    c.interior = {r1};
    return c;
  }
  if (n == 2) {
    // Regions 1 and 2 swap under the mirror; speeds are (-c, 0, c). The jump
    // conditions force rho1 = rho0, [m1]_2 = 0, [U1]_11 = q1 - p(rho0) and
    // [U1]_12 = -c (rho0 u0 + m11). Free: (c, m11, q1, f12).
    const double speed = params.at(0);
    const double m11 = params.at(1);
    const double q1 = params.at(2);
    const double f12 = params.at(3);
    c.speeds = {-speed, 0.0, speed};
    FanState r1;
    r1.rho = rho0;
    r1.m = {m11, 0.0};
    r1.U = {q1 - p0, -speed * (rho0 * u0 + m11)};
    r1.q = q1;
    r1.F = {0.0, f12};
    FanState r2 = r1;
    r2.m.x = -m11;
    r2.F.y = -f12;
    c.interior = {r1, r2};
    return c;
  }
  throw ConfigError("symmetric ansatz supports n in {1, 2}");
}

ScanSummary n_region_scan(const SymmetricContactDatum& datum, const PressureLaw& law,
                          const PotentialContext& ctx, int n,
                          const InfeasibilityGrid& grid, std::uint64_t seed,
                          std::ostream* cell_csv) {
  if (n != 1 && n != 2)
    throw ConfigError("n_region_scan supports n in {1, 2}; use construct for the "
                      "five-region partition");
  const std::size_t expected_axes = n == 1 ? 2 : 4;
  if (grid.axes.size() != expected_axes)
    throw ConfigError("grid for n=" + std::to_string(n) + " needs " +
                      std::to_string(expected_axes) + " axes");
  std::size_t cells = 1;
  for (const AxisSpec& ax : grid.axes) {
    if (ax.count < 1 || !(ax.low <= ax.high))
      throw ConfigError("invalid axis " + ax.name);
    cells *= static_cast<std::size_t>(ax.count);
  }
  if (cells + grid.random_samples > grid.cap)
    throw ConfigError("grid of " + std::to_string(cells + grid.random_samples) +
                      " cells exceeds the cap of " + std::to_string(grid.cap));

  ScanSummary summary;
  summary.n_interior = n;
  summary.label = "numerical evidence";
  summary.ansatz_note =
      "mirror-symmetric ansatz with the Rankine-Hugoniot equalities solved in "
      "closed form; the scan is restricted to this symmetry class and proves "
      "nothing outside it";
  summary.grid = grid;
  summary.seed = seed;
  summary.best_min_slack = -std::numeric_limits<double>::infinity();

  if (cell_csv) {
    *cell_csv << "index";
    for (const AxisSpec& ax : grid.axes) *cell_csv << "," << ax.name;
    *cell_csv << ",feasible,min_slack,conditions_passed\n";
  }

  std::vector<std::size_t> pass_counts;
  std::vector<std::string> condition_ids;

  auto evaluate = [&](std::size_t index, const std::vector<double>& params) {
    const Candidate candidate = symmetric_ansatz_candidate(n, datum, law, params);
    const VerificationReport report = verify(candidate, law, ctx, {}, datum);
    if (condition_ids.empty()) {
      for (const ConditionResult& c : report.conditions) condition_ids.push_back(c.id);
      pass_counts.assign(condition_ids.size(), 0);
    }
    double min_slack = std::numeric_limits<double>::infinity();
    std::string worst;
    std::size_t passed = 0;
    for (std::size_t k = 0; k < report.conditions.size(); ++k) {
      const ConditionResult& c = report.conditions[k];
      if (c.pass) {
        ++pass_counts[k];
        ++passed;
      }
      if (c.kind == ConditionKind::equality) continue;  // hold by construction
      if (c.slack < min_slack) {
        min_slack = c.slack;
        worst = c.id;
      }
    }
    if (report.all_pass) ++summary.feasible_count;
    if (min_slack > summary.best_min_slack) {
      summary.best_min_slack = min_slack;
      summary.best_params = params;
      summary.best_worst_condition = worst;
    }
    ++summary.cells_evaluated;
    if (cell_csv) {
      char buf[64];
      *cell_csv << index;
      for (double v : params) {
        std::snprintf(buf, sizeof buf, ",%.17g", v);
        *cell_csv << buf;
      }
      std::snprintf(buf, sizeof buf, ",%d,%.17g,%zu", report.all_pass ? 1 : 0,
                    min_slack, passed);
      *cell_csv << buf << "\n";
    }
  };

  GridIterator it(grid);
  std::size_t index = 0;
  do {
    evaluate(index++, it.values());
  } while (it.advance());

  std::mt19937_64 gen(seed);
  for (std::size_t r = 0; r < grid.random_samples; ++r) {
    std::vector<double> params(grid.axes.size());
    for (std::size_t k = 0; k < grid.axes.size(); ++k) {
      const AxisSpec& ax = grid.axes[k];
      params[k] = ax.low + (ax.high - ax.low) * uniform01(gen);
    }
    evaluate(index++, params);
  }

  for (std::size_t k = 0; k < condition_ids.size(); ++k)
    summary.condition_pass_counts.emplace_back(condition_ids[k], pass_counts[k]);
  summary.verdict = summary.feasible_count == 0 ? "no feasible point found"
                                                : "feasible point found";
  return summary;
}

}  // namespace fansub
