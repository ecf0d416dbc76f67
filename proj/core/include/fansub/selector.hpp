#pragma once

#include "fansub/reduction.hpp"
#include "fansub/verifier.hpp"

namespace fansub {

/// Deterministic halving-search schedule. A candidate is accepted when every
/// required inequality holds with slack >= theta*(|lhs|+|rhs|)/2 + 1e-14.
/// eps_start/a_start of 0 mean the defaults rho0/2 and b/2.
struct SelectorOptions {
  double theta = 0.1;
  double eps_start = 0.0;
  double a_start = 0.0;
  int max_halvings = 200;
};

/// Density offset defining rho2 = rho0 - eps; satisfies the smallness
/// inequality with the configured safety margin.
struct Epsilon {
  double value = 0.0;
};

/// b = sqrt(p'(rho0) + 1). Independent of u0.
double choose_b(const PressureLaw& law, double rho0);

/// First eps in the halving ladder rho0/2, rho0/4, ... whose slack in
///   eps (u0^2 + 2 P'(rho0) + 3) + 2P(rho0-eps) - p(rho0-eps)
///     - 2P(rho0) + p(rho0)  <  rho0 u0^2 / 2
/// meets the margin rule. Throws SelectionError after max_halvings.
Epsilon choose_epsilon(const PressureLaw& law, const SymmetricContactDatum& datum,
                       const PotentialContext& ctx, const SelectorOptions& opts = {});

/// q2 = (p(rho0) + p(rho0 - eps) + rho0 u0^2 / 2) / 2.
double compute_q2(const PressureLaw& law, const SymmetricContactDatum& datum,
                  Epsilon eps);

/// First a in the ladder b/2, b/4, ... satisfying all three smallness
/// conditions (difference-quotient bounds and the region-2 determinant
/// inequality) with the margin rule. Throws SelectionError after max_halvings.
double choose_a(const PressureLaw& law, const SymmetricContactDatum& datum,
                const PotentialContext& ctx, double b, Epsilon eps,
                const SelectorOptions& opts = {});

struct SelectedParameters {
  double b = 0.0;
  double eps = 0.0;
  double a = 0.0;
  double rho1 = 0.0;
  double m11 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
};

struct ConstructResult {
  SelectedParameters selected;
  FanSubsolution subsolution;
  VerificationReport report;
};

/// Full pipeline: choose_b -> choose_epsilon -> compute_q2 -> choose_a, then
///   rho1 = rho0 + a eps / (b - a),
///   q1   = (rho1 u0^2 + (rho1 - rho0)(b^2 + 1) + p(rho0) + p(rho1)) / 2,
///   m11  = -rho1 u0,
/// assemble via reduce and re-check everything with verify. A failing report
/// is returned as data (all_pass = false), never raised.
ConstructResult construct(const SymmetricContactDatum& datum,
                          const PressureLaw& law, const PotentialContext& ctx,
                          const SelectorOptions& opts = {},
                          const Tolerances& tols = {});

}  // namespace fansub
