#include "fansub/selector.hpp"

#include <cmath>

#include "fansub/errors.hpp"

namespace fansub {

namespace {

constexpr double kMarginFloor = 1e-14;

bool margin_ok(double slack, double lhs, double rhs, double theta) {
  return slack >= theta * (std::abs(lhs) + std::abs(rhs)) / 2.0 + kMarginFloor;
}

}  // namespace

double choose_b(const PressureLaw& law, double rho0) {
  return std::sqrt(law.dp(rho0) + 1.0);
}

Epsilon choose_epsilon(const PressureLaw& law, const SymmetricContactDatum& datum,
                       const PotentialContext& ctx, const SelectorOptions& opts) {
  if (!datum.valid())
    throw DomainError("contact datum requires rho0 > 0 and u0 != 0");
  const double rho0 = datum.rho0;
  const double u0 = datum.u0;
  const double rhs = 0.5 * rho0 * u0 * u0;
  const double dP0 = law.dpotential(rho0, ctx);
  const double P0 = law.potential(rho0, ctx);
  const double p0 = law.p(rho0);

  double eps = opts.eps_start > 0.0 ? opts.eps_start : 0.5 * rho0;
  for (int i = 0; i < opts.max_halvings; ++i, eps *= 0.5) {
    // A ladder candidate may fall outside a tabulated hull; smaller ones
    // re-enter it, so treat the domain error as a failed candidate.
    try {
      const double lhs = eps * (u0 * u0 + 2.0 * dP0 + 3.0) +
                         2.0 * law.potential(rho0 - eps, ctx) -
                         law.p(rho0 - eps) - 2.0 * P0 + p0;
      if (margin_ok(rhs - lhs, lhs, rhs, opts.theta)) return Epsilon{eps};
    } catch (const DomainError&) {
    }
  }
  throw SelectionError("epsilon selection exhausted after " +
                       std::to_string(opts.max_halvings) + " halvings");
}

double compute_q2(const PressureLaw& law, const SymmetricContactDatum& datum,
                  Epsilon eps) {
  const double rho0 = datum.rho0;
  if (!(eps.value > 0.0 && eps.value < rho0))
    throw DomainError("epsilon must lie in (0, rho0)");
  return (law.p(rho0) + law.p(rho0 - eps.value) +
          0.5 * rho0 * datum.u0 * datum.u0) / 2.0;
}

double choose_a(const PressureLaw& law, const SymmetricContactDatum& datum,
                const PotentialContext& ctx, double b, Epsilon eps,
                const SelectorOptions& opts) {
  if (!datum.valid())
    throw DomainError("contact datum requires rho0 > 0 and u0 != 0");
  const double rho0 = datum.rho0;
  const double u0 = datum.u0;
  const double e = eps.value;
  const double p0 = law.p(rho0);
  const double P0 = law.potential(rho0, ctx);
  const double dp0 = law.dp(rho0);
  const double dP0 = law.dpotential(rho0, ctx);
  const double p_minus = law.p(rho0 - e);

  double a = opts.a_start > 0.0 ? opts.a_start : 0.5 * b;
  for (int i = 0; i < opts.max_halvings; ++i, a *= 0.5) {
    try {
      const double delta = a * e / (b - a);  // rho1 - rho0 for this candidate
      const double rho1 = rho0 + delta;
      const double p1 = law.p(rho1);
      const double P1 = law.potential(rho1, ctx);

      const double a1_lhs = (2.0 * P1 - 2.0 * P0) / delta - (p1 - p0) / delta;
      const double a1_rhs = 2.0 * dP0 - dp0 + 1.0;
      const double a2_lhs = ((p1 - p0) / delta) * (1.0 + delta / rho0);
      const double a2_rhs = dp0 + 1.0;
      const double a3_lhs = (a * b * e - 0.5 * rho0 * u0 * u0) *
                            (-a * b * e - p0 + p_minus);
      const double a3_rhs = (a * u0 * (rho0 - e)) * (a * u0 * (rho0 - e));

      if (margin_ok(a1_rhs - a1_lhs, a1_lhs, a1_rhs, opts.theta) &&
          margin_ok(a2_rhs - a2_lhs, a2_lhs, a2_rhs, opts.theta) &&
          margin_ok(a3_lhs - a3_rhs, a3_lhs, a3_rhs, opts.theta))
        return a;
    } catch (const DomainError&) {
    }
  }
  throw SelectionError("a selection exhausted after " +
                       std::to_string(opts.max_halvings) + " halvings");
}

ConstructResult construct(const SymmetricContactDatum& datum,
                          const PressureLaw& law, const PotentialContext& ctx,
                          const SelectorOptions& opts, const Tolerances& tols) {
  const double b = choose_b(law, datum.rho0);
  const Epsilon eps = choose_epsilon(law, datum, ctx, opts);
  const double q2 = compute_q2(law, datum, eps);
  const double a = choose_a(law, datum, ctx, b, eps, opts);

  SymmetricParameters params;
  params.a = a;
  params.b = b;
  params.rho1 = datum.rho0 + a * eps.value / (b - a);
  params.m11 = -params.rho1 * datum.u0;
  params.q1 = (params.rho1 * datum.u0 * datum.u0 +
               (params.rho1 - datum.rho0) * (b * b + 1.0) + law.p(datum.rho0) +
               law.p(params.rho1)) / 2.0;
  params.q2 = q2;

  ConstructResult result;
  result.selected = {b, eps.value, a, params.rho1, params.m11, params.q1, params.q2};
  result.subsolution = reduce(params, datum, law, ctx);
  result.report = verify(Candidate::from(result.subsolution), law, ctx, tols, datum);
  return result;
}

}  // namespace fansub
