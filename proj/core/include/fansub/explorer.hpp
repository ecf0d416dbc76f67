#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fansub/pressure.hpp"
#include "fansub/states.hpp"

namespace fansub {

struct GridAxis {
  double low = 0.0;
  double high = 1.0;
  int count = 2;
};

/// (a, eps) grid for a fixed b = sqrt(p'(rho0) + 1). Requires
/// 0 < a_low < a_high < b, 0 < eps_low < eps_high < rho0, counts >= 2 and
/// total cells <= cap.
struct GridSpec {
  GridAxis a_axis;
  GridAxis eps_axis;
  std::size_t cap = 1000000;
};

/// Per-cell condition margins, all signed with positive = satisfied:
///   slack_epsilon         the eps smallness inequality
///   slack_a1..slack_a3    the three a smallness inequalities
///   slack_en              the interior entropy inequality
///   slack_tr1/det1        region 1/3 trace and determinant conditions
///   slack_tr2/det2        region 2 trace and determinant conditions
/// feasible <=> all nine slacks > 0 and the assembled candidate passes the
/// full verifier. min_slack = min of the nine family slacks.
struct CellResult {
  double a = 0.0;
  double eps = 0.0;
  bool feasible = false;
  double min_slack = 0.0;
  double slack_epsilon = 0.0;
  double slack_a1 = 0.0;
  double slack_a2 = 0.0;
  double slack_a3 = 0.0;
  double slack_en = 0.0;
  double slack_tr1 = 0.0;
  double slack_det1 = 0.0;
  double slack_tr2 = 0.0;
  double slack_det2 = 0.0;
  bool verify_all_pass = false;
};

struct FeasibilityTable {
  SymmetricContactDatum datum;
  std::string law;
  double rho_star = 1.0;
  double b = 0.0;
  GridSpec grid;
  /// Row-major with a outermost: cells[ia * eps_count + ie].
  std::vector<CellResult> cells;
};

/// a in [0.02 b, 0.98 b] x 50, eps in [0.01 rho0, 0.99 rho0] x 40.
GridSpec default_grid(const SymmetricContactDatum& datum, const PressureLaw& law);

/// One cell: derive rho1, q1, q2, m11 from (a, eps), assemble with reduce and
/// run the verifier, and evaluate the nine condition families.
CellResult evaluate_cell(const SymmetricContactDatum& datum, const PressureLaw& law,
                         const PotentialContext& ctx, double b, double a,
                         double eps);

/// Full grid scan; cells are independent and may be evaluated in parallel.
/// Parallel and serial scans produce identical tables.
/// Throws ConfigError on an invalid grid or one above the cell cap.
FeasibilityTable scan_feasibility(const SymmetricContactDatum& datum,
                                  const PressureLaw& law,
                                  const PotentialContext& ctx,
                                  const GridSpec& grid, bool parallel = true);

/// CSV columns: a,eps,feasible,min_slack,slack_epsilon,slack_a1,slack_a2,
/// slack_a3,slack_en,slack_tr1,slack_det1,slack_tr2,slack_det2.
/// Rows a-major then eps; byte-identical for identical tables.
void emit_csv(const FeasibilityTable& table, const std::filesystem::path& path);

/// Self-contained SVG heatmap, cells colored by min_slack sign and magnitude,
/// axes labeled.
void emit_heatmap(const FeasibilityTable& table, const std::filesystem::path& path);

}  // namespace fansub
