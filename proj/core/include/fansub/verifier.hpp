#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fansub/reduction.hpp"
#include "fansub/states.hpp"

namespace fansub {

enum class ConditionKind { equality, strict, nonstrict };

std::string_view to_string(ConditionKind k);

/// One verified condition. slack is signed with positive = satisfied for
/// inequality conditions; for equalities it is the signed residual lhs - rhs.
struct ConditionResult {
  std::string id;
  ConditionKind kind = ConditionKind::equality;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

/// equality:  pass <=> |lhs - rhs| <= tol_eq * max(1, |lhs|, |rhs|)
/// strict:    pass <=> slack > tol_strict * (1 + |lhs| + |rhs|)
/// nonstrict: pass <=> slack >= -tol_eq * max(1, |lhs|, |rhs|)
struct Tolerances {
  double tol_eq = 1e-9;
  double tol_strict = 1e-12;
};

/// Boundary data of a candidate: only (rho, m) are free, the boundary
/// (q, U, F) are always recomputed from the defining formulas.
struct BoundaryState {
  double rho = 1.0;
  Vec2 m;
};

/// Generic fan candidate with N >= 1 interior regions and N+1 speeds.
struct Candidate {
  std::vector<double> speeds;
  BoundaryState left;
  BoundaryState right;
  std::vector<FanState> interior;

  static Candidate from(const FanSubsolution& sub);
  int n_interior() const { return static_cast<int>(interior.size()); }
};

struct ReportContext {
  std::string law;
  std::optional<SymmetricContactDatum> datum;
  double rho_star = 1.0;
};

struct VerificationReport {
  std::vector<ConditionResult> conditions;
  bool all_pass = false;
  Tolerances tolerances;
  ReportContext context;

  const ConditionResult* find(std::string_view id) const;
};

/// Check the full algebraic system for an arbitrary candidate:
///   speed.order.pair{i}   mu_i < mu_{i+1}                       (strict)
///   rh.mass.iface{i}      mu_i (rho_i - rho_{i+1}) = [m_i]_2 - [m_{i+1}]_2
///   rh.m1.iface{i}        mu_i ([m_i]_1 - [m_{i+1}]_1) = [U_i]_12 - [U_{i+1}]_12
///   rh.m2.iface{i}        mu_i ([m_i]_2 - [m_{i+1}]_2)
///                           = -[U_i]_11 + q_i + [U_{i+1}]_11 - q_{i+1}
///   entropy.iface{i}      mu_i (q_i + P_i - p_i - q_{i+1} - P_{i+1} + p_{i+1})
///                           <= [F_i]_2 - [F_{i+1}]_2            (nonstrict)
///   subsol.tr.region{r}   |m|^2/rho + 2 (p - q) < 0             (strict)
///   subsol.det.region{r}  product of the two diagonal factors
///                           > ([m]_1 [m]_2 / rho - [U]_12)^2    (strict)
///   density.region{r}     rho > 0                               (strict)
/// Every quantity is recomputed from the raw state values and the law; a
/// failing condition is reported, never raised.
/// Throws StructuralError if speeds.size() != interior.size() + 1 or a value
/// is not finite.
VerificationReport verify(const Candidate& candidate, const PressureLaw& law,
                          const PotentialContext& ctx,
                          const Tolerances& tols = {},
                          std::optional<SymmetricContactDatum> datum_echo = {});

struct EigenCheck {
  int region = 0;       // 1-based interior region index
  double lambda = 0.0;  // lambda_max of the subsolution matrix
  bool agrees = true;   // sign(lambda) consistent with the trace/det sign test
  bool marginal = false;  // one of the computations within tol of zero
};

/// Cross-check: sign(lambda_max) must agree with (trace < 0 && det > 0)
/// whenever both computations are at least tol away from zero.
std::vector<EigenCheck> eigen_crosscheck(const Candidate& candidate,
                                         const PressureLaw& law,
                                         double tol = 1e-10);

}  // namespace fansub
