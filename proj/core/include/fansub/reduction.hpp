#pragma once

#include <array>

#include "fansub/states.hpp"

namespace fansub {

/// The six free parameters of the mirror-symmetric five-region ansatz:
/// speeds (-b, -a, a, b) with 0 < a < b, and (rho1, m11, q1, q2). Everything
/// else is determined by the Rankine-Hugoniot reduction.
struct SymmetricParameters {
  double a = 0.0;
  double b = 0.0;
  double rho1 = 0.0;
  double m11 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;

  /// Throws std::invalid_argument unless 0 < a < b.
  void validate() const;
};

/// Five-region candidate: boundary states plus interior regions 1,2,3.
/// Region 3 mirrors region 1: (rho3, m3, U3, q3, F3) = (rho1, -m1, U1, q1, -F1).
struct FanSubsolution {
  FanPartition partition;
  FanState left;
  std::array<FanState, 3> interior;
  FanState right;
};

/// Assemble the full candidate from the free parameters:
///   [m1]_2 = -b (rho1 - rho0),   m2 = 0,   rho2 = rho1 - (b/a)(rho1 - rho0),
///   [U1]_11 = -b^2 (rho1-rho0) - p(rho0) + q1,   [U1]_12 = -b (rho0 u0 + m11),
///   [U2]_11 = -b(b-a)(rho1-rho0) - p(rho0) + q2, [U2]_12 = -(b-a) m11 - b rho0 u0,
///   [F1]_2 = -b (q1 + P(rho1) - p(rho1) - rho0 u0^2/2 - P(rho0)),   F2 = 0.
/// Interior flux first components are fixed to 0 (they enter no condition and
/// 0 keeps the mirror symmetry exact).
/// Throws DensityError if rho1 <= 0 or the derived rho2 <= 0.
FanSubsolution reduce(const SymmetricParameters& params,
                      const SymmetricContactDatum& datum,
                      const PressureLaw& law, const PotentialContext& ctx);

}  // namespace fansub
