#pragma once

#include <array>
#include <utility>

#include "fansub/pressure.hpp"

namespace fansub {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Symmetric traceless 2x2 matrix, stored as (u11, u12) with u22 = -u11 and
/// u21 = u12. Tracelessness is structural, not a runtime check.
struct TracelessSym2 {
  double u11 = 0.0;
  double u12 = 0.0;
};

/// General symmetric 2x2 matrix (m21 = m12).
struct Sym2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m22 = 0.0;
};

/// One fan region's unknowns: density, momentum, matrix relaxation, energy
/// scalar and energy flux.
struct FanState {
  double rho = 1.0;
  Vec2 m;
  TracelessSym2 U;
  double q = 0.0;
  Vec2 F;
};

/// Riemann datum with a pure tangential-momentum jump:
/// rho_+- = rho0, m_+- = (+-rho0*u0, 0).
struct SymmetricContactDatum {
  double rho0 = 1.0;
  double u0 = 1.0;

  bool valid() const { return rho0 > 0.0 && u0 != 0.0; }
};

/// Interface speeds mu0 < mu1 < mu2 < mu3 of a five-region fan partition.
struct FanPartition {
  std::array<double, 4> speeds{};

  bool strictly_ordered() const {
    return speeds[0] < speeds[1] && speeds[1] < speeds[2] &&
           speeds[2] < speeds[3];
  }
};

/// Boundary states (left = y < mu0*t, right = y > mu3*t) with
///   q  = |m|^2 / (2 rho) + p(rho)
///   U  = m (x) m / rho + (p - q) I
///   F  = (q + P(rho)) / rho * m.
std::pair<FanState, FanState> boundary_states(const SymmetricContactDatum& datum,
                                              const PressureLaw& law,
                                              const PotentialContext& ctx);

/// Full boundary tuple for arbitrary (rho, m) by the same defining formulas.
FanState derived_boundary_state(double rho, const Vec2& m, const PressureLaw& law,
                                const PotentialContext& ctx);

/// M = m (x) m / rho - U + (p(rho) - q) I.  lambda_max(M) < 0 is the strict
/// subsolution condition; boundary states give M = 0 exactly.
Sym2 subsolution_matrix(const FanState& s, const PressureLaw& law);

/// Larger eigenvalue of a symmetric 2x2 matrix, by the closed form
/// (m11+m22)/2 + sqrt(((m11-m22)/2)^2 + m12^2).
double lambda_max(const Sym2& M);

double trace(const Sym2& M);
double det(const Sym2& M);

/// x-reflection (x -> -x): flips first components of m and F and the
/// off-diagonal entry of U.
FanState xreflect(const FanState& s);

}  // namespace fansub
