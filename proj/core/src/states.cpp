#include "fansub/states.hpp"

#include <cmath>

#include "fansub/errors.hpp"

namespace fansub {

FanState derived_boundary_state(double rho, const Vec2& m, const PressureLaw& law,
                                const PotentialContext& ctx) {
  FanState s;
  s.rho = rho;
  s.m = m;
  const double p = law.p(rho);
  s.q = 0.5 * (m.x * m.x + m.y * m.y) / rho + p;
  // U = m (x) m / rho + (p - q) I is traceless by the choice of q.
  s.U.u11 = m.x * m.x / rho + (p - s.q);
  s.U.u12 = m.x * m.y / rho;
  const double flux = (s.q + law.potential(rho, ctx)) / rho;
  s.F = {flux * m.x, flux * m.y};
  return s;
}

std::pair<FanState, FanState> boundary_states(const SymmetricContactDatum& datum,
                                              const PressureLaw& law,
                                              const PotentialContext& ctx) {
  if (!datum.valid())
    throw DomainError("contact datum requires rho0 > 0 and u0 != 0");
  FanState right = derived_boundary_state(
      datum.rho0, Vec2{datum.rho0 * datum.u0, 0.0}, law, ctx);
  FanState left = right;
  left.m.x = -right.m.x;
  left.F.x = -right.F.x;
  return {left, right};
}

Sym2 subsolution_matrix(const FanState& s, const PressureLaw& law) {
  const double shift = law.p(s.rho) - s.q;
  Sym2 M;
  M.m11 = s.m.x * s.m.x / s.rho - s.U.u11 + shift;
  M.m12 = s.m.x * s.m.y / s.rho - s.U.u12;
  M.m22 = s.m.y * s.m.y / s.rho + s.U.u11 + shift;
  return M;
}

double lambda_max(const Sym2& M) {
  const double mean = 0.5 * (M.m11 + M.m22);
  const double half_gap = 0.5 * (M.m11 - M.m22);
  return mean + std::sqrt(half_gap * half_gap + M.m12 * M.m12);
}

double trace(const Sym2& M) { return M.m11 + M.m22; }

double det(const Sym2& M) { return M.m11 * M.m22 - M.m12 * M.m12; }

FanState xreflect(const FanState& s) {
  FanState r = s;
  r.m.x = -s.m.x;
  r.U.u12 = -s.U.u12;
  r.F.x = -s.F.x;
  return r;
}

}  // namespace fansub
