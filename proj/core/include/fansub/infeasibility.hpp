#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fansub/pressure.hpp"
#include "fansub/states.hpp"
#include "fansub/verifier.hpp"

namespace fansub {

/// Exact contradiction for three-region fan partitions. The mass and normal
/// momentum jump conditions force rho1 = rho0, [m1]_2 = 0 and
/// [U1]_11 - q1 = -p(rho0); substituted into the determinant condition the
/// left side collapses to 0 while the right side is [U1]_12^2 >= 0, so the
/// strict inequality 0 > [U1]_12^2 is impossible for every remaining choice.
struct ContradictionCertificate {
  struct ForcedValue {
    std::string symbol;
    double value = 0.0;
  };
  std::vector<ForcedValue> forced;
  double det_lhs = 0.0;              // exactly 0 after the forced substitutions
  double det_rhs_lower_bound = 0.0;  // [U1]_12^2 >= 0 for every candidate
  std::string conclusion;            // "infeasible"
};

/// The forced substitutions are carried symbolically (the second determinant
/// factor is written as p(rho0) - p(rho0)), so det_lhs is structurally zero,
/// not a subtraction of nearly equal floats.
ContradictionCertificate three_region_certificate(const SymmetricContactDatum& datum,
                                                  const PressureLaw& law);

struct AxisSpec {
  std::string name;
  double low = 0.0;
  double high = 1.0;
  int count = 2;
};

struct InfeasibilityGrid {
  std::vector<AxisSpec> axes;
  std::size_t cap = 1000000;       // refuse grids larger than this
  std::size_t random_samples = 0;  // extra uniform samples inside the axis box
};

/// Default 1e5-cell grids over the free parameters of the mirror-symmetric
/// ansatz with the Rankine-Hugoniot equalities solved in closed form:
///   n = 1: (a, q1), with m1 = 0, F1 = 0, rho1 = rho0 forced
///   n = 2: (c, m11, q1, f12), speeds (-c, 0, c), region 2 the mirror of 1
InfeasibilityGrid default_infeasibility_grid(int n, const SymmetricContactDatum& datum,
                                             const PressureLaw& law);

/// Candidate at one sample point of the symmetric n-interior ansatz.
Candidate symmetric_ansatz_candidate(int n, const SymmetricContactDatum& datum,
                                     const PressureLaw& law,
                                     const std::vector<double>& params);

struct ScanSummary {
  int n_interior = 0;
  std::string label;        // always "numerical evidence"
  std::string ansatz_note;  // symmetry restriction, stated explicitly
  InfeasibilityGrid grid;
  std::uint64_t seed = 0;
  std::size_t cells_evaluated = 0;
  std::size_t feasible_count = 0;
  /// Pass counts per condition id, in report emission order.
  std::vector<std::pair<std::string, std::size_t>> condition_pass_counts;
  /// Candidate maximizing the minimum inequality slack (equalities hold by
  /// construction). Ties broken by first cell index.
  std::vector<double> best_params;
  double best_min_slack = 0.0;
  std::string best_worst_condition;
  std::string verdict;  // "no feasible point found" or "feasible point found"
};

/// Grid scan over the free parameters for n in {1, 2}. Results are evidence,
/// not proof; the summary says so. Reproducible given (grid, seed).
/// cell_csv, when non-null, receives one row per evaluated cell.
/// Throws ConfigError for n outside {1, 2} or a grid above the cell cap.
ScanSummary n_region_scan(const SymmetricContactDatum& datum, const PressureLaw& law,
                          const PotentialContext& ctx, int n,
                          const InfeasibilityGrid& grid, std::uint64_t seed,
                          std::ostream* cell_csv = nullptr);

}  // namespace fansub
