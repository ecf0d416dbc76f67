#include "fansub/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fansub/errors.hpp"

namespace fansub {

namespace {

double eq_scale(double lhs, double rhs) {
  return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

ConditionResult make_equality(std::string id, double lhs, double rhs,
                              const Tolerances& tols) {
  ConditionResult c;
  c.id = std::move(id);
  c.kind = ConditionKind::equality;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.pass = std::abs(lhs - rhs) <= tols.tol_eq * eq_scale(lhs, rhs);
  return c;
}

// slack must already be oriented so that positive means satisfied.
ConditionResult make_strict(std::string id, double lhs, double rhs, double slack,
                            const Tolerances& tols) {
  ConditionResult c;
  c.id = std::move(id);
  c.kind = ConditionKind::strict;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = slack;
  c.pass = slack > tols.tol_strict * (1.0 + std::abs(lhs) + std::abs(rhs));
  return c;
}

ConditionResult make_nonstrict(std::string id, double lhs, double rhs,
                               const Tolerances& tols) {
  ConditionResult c;
  c.id = std::move(id);
  c.kind = ConditionKind::nonstrict;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.pass = c.slack >= -tols.tol_eq * eq_scale(lhs, rhs);
  return c;
}

bool all_finite(const FanState& s) {
  return std::isfinite(s.rho) && std::isfinite(s.m.x) && std::isfinite(s.m.y) &&
         std::isfinite(s.U.u11) && std::isfinite(s.U.u12) && std::isfinite(s.q) &&
         std::isfinite(s.F.x) && std::isfinite(s.F.y);
}

}  // namespace

std::string_view to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::equality: return "equality";
    case ConditionKind::strict: return "strict";
    case ConditionKind::nonstrict: return "nonstrict";
  }
  return "unknown";
}

Candidate Candidate::from(const FanSubsolution& sub) {
  Candidate c;
  c.speeds.assign(sub.partition.speeds.begin(), sub.partition.speeds.end());
  c.left = {sub.left.rho, sub.left.m};
  c.right = {sub.right.rho, sub.right.m};
  c.interior.assign(sub.interior.begin(), sub.interior.end());
  return c;
}

const ConditionResult* VerificationReport::find(std::string_view id) const {
  const auto it = std::find_if(conditions.begin(), conditions.end(),
                               [&](const ConditionResult& c) { return c.id == id; });
  return it == conditions.end() ? nullptr : &*it;
}

VerificationReport verify(const Candidate& candidate, const PressureLaw& law,
                          const PotentialContext& ctx, const Tolerances& tols,
                          std::optional<SymmetricContactDatum> datum_echo) {
  const int n = candidate.n_interior();
  if (n < 1) throw StructuralError("candidate needs at least one interior region");
  if (candidate.speeds.size() != static_cast<std::size_t>(n) + 1)
    throw StructuralError("candidate has " + std::to_string(candidate.speeds.size()) +
                          " speeds for " + std::to_string(n) +
                          " interior regions (need interiors + 1)");
  if (!(candidate.left.rho > 0.0) || !(candidate.right.rho > 0.0))
    throw StructuralError("boundary densities must be positive");
  for (double mu : candidate.speeds)
    if (!std::isfinite(mu)) throw StructuralError("speeds must be finite");
  for (const FanState& s : candidate.interior)
    if (!all_finite(s)) throw StructuralError("interior state values must be finite");

  VerificationReport report;
  report.tolerances = tols;
  report.context.law = law.describe();
  report.context.datum = datum_echo;
  report.context.rho_star = ctx.rho_star;

  // Chain of states: region 0 = left boundary, 1..n interior, n+1 = right.
  std::vector<FanState> chain;
  chain.reserve(n + 2);
  chain.push_back(derived_boundary_state(candidate.left.rho, candidate.left.m, law, ctx));
  for (const FanState& s : candidate.interior) chain.push_back(s);
  chain.push_back(derived_boundary_state(candidate.right.rho, candidate.right.m, law, ctx));

  auto& out = report.conditions;

  for (int i = 0; i + 1 <= n; ++i) {
    const double lo = candidate.speeds[i];
    const double hi = candidate.speeds[i + 1];
    out.push_back(make_strict("speed.order.pair" + std::to_string(i), lo, hi,
                              hi - lo, tols));
  }

  for (int i = 0; i <= n; ++i) {
    const double mu = candidate.speeds[i];
    const FanState& s = chain[i];
    const FanState& t = chain[i + 1];
    const std::string iface = ".iface" + std::to_string(i);
    out.push_back(make_equality("rh.mass" + iface, mu * (s.rho - t.rho),
                                s.m.y - t.m.y, tols));
    out.push_back(make_equality("rh.m1" + iface, mu * (s.m.x - t.m.x),
                                s.U.u12 - t.U.u12, tols));
    out.push_back(make_equality("rh.m2" + iface, mu * (s.m.y - t.m.y),
                                -s.U.u11 + s.q + t.U.u11 - t.q, tols));
  }

  // Interior densities outside the law's evaluable range make the affected
  // conditions fail with NaN payloads instead of raising: failure is data.
  auto safe_p = [&](double rho) -> double {
    try {
      return law.p(rho);
    } catch (const DomainError&) {
      return std::nan("");
    }
  };
  auto safe_potential = [&](double rho) -> double {
    try {
      return law.potential(rho, ctx);
    } catch (const DomainError&) {
      return std::nan("");
    }
  };

  for (int i = 0; i <= n; ++i) {
    const double mu = candidate.speeds[i];
    const FanState& s = chain[i];
    const FanState& t = chain[i + 1];
    const double es = s.q + safe_potential(s.rho) - safe_p(s.rho);
    const double et = t.q + safe_potential(t.rho) - safe_p(t.rho);
    out.push_back(make_nonstrict("entropy.iface" + std::to_string(i),
                                 mu * (es - et), s.F.y - t.F.y, tols));
  }

  for (int r = 1; r <= n; ++r) {
    const FanState& s = chain[r];
    const std::string region = ".region" + std::to_string(r);
    const double p = safe_p(s.rho);
    const double tr = (s.m.x * s.m.x + s.m.y * s.m.y) / s.rho + 2.0 * (p - s.q);
    out.push_back(make_strict("subsol.tr" + region, tr, 0.0, -tr, tols));
    const double f1 = s.m.x * s.m.x / s.rho - s.U.u11 + p - s.q;
    const double f2 = s.m.y * s.m.y / s.rho + s.U.u11 + p - s.q;
    const double cross = s.m.x * s.m.y / s.rho - s.U.u12;
    out.push_back(make_strict("subsol.det" + region, f1 * f2, cross * cross,
                              f1 * f2 - cross * cross, tols));
  }

  for (int r = 1; r <= n; ++r) {
    out.push_back(make_strict("density.region" + std::to_string(r), chain[r].rho,
                              0.0, chain[r].rho, tols));
  }

  report.all_pass = std::all_of(out.begin(), out.end(),
                                [](const ConditionResult& c) { return c.pass; });
  return report;
}

std::vector<EigenCheck> eigen_crosscheck(const Candidate& candidate,
                                         const PressureLaw& law, double tol) {
  std::vector<EigenCheck> checks;
  checks.reserve(candidate.interior.size());
  for (std::size_t i = 0; i < candidate.interior.size(); ++i) {
    EigenCheck chk;
    chk.region = static_cast<int>(i) + 1;
    Sym2 M;
    try {
      M = subsolution_matrix(candidate.interior[i], law);
    } catch (const DomainError&) {
      chk.lambda = std::nan("");
      chk.marginal = true;
      checks.push_back(chk);
      continue;
    }
    chk.lambda = lambda_max(M);
    const double tr = trace(M);
    const double dt = det(M);
    chk.marginal = std::abs(chk.lambda) < tol || std::abs(tr) < tol ||
                   std::abs(dt) < tol;
    chk.agrees = chk.marginal || ((chk.lambda < 0.0) == (tr < 0.0 && dt > 0.0));
    checks.push_back(chk);
  }
  return checks;
}

}  // namespace fansub
