#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fansub {

/// Reference density rho* for the pressure potential
///   P(rho) = rho * integral_{rho*}^{rho} p(r)/r^2 dr.
/// P is defined up to a linear function of rho; rho* fixes the gauge.
struct PotentialContext {
  double rho_star = 1.0;
};

/// A strictly increasing C^1 pressure law p(rho) > 0, p'(rho) > 0.
///
/// Two kinds are supported:
///   - polytropic:  p(rho) = K * rho^gamma, K > 0, gamma >= 1
///   - tabulated:   monotone piecewise-cubic interpolant through strictly
///                  increasing (rho, p) samples; evaluable only inside the
///                  closed sample hull (no extrapolation)
class PressureLaw {
public:
  static PressureLaw polytropic(double coefficient, double exponent);
  static PressureLaw tabulated(std::vector<std::pair<double, double>> samples);
  /// Two-column CSV (rho, p); optional header row; rows strictly increasing.
  static PressureLaw tabulated_from_csv(const std::filesystem::path& path);

  double p(double rho) const;
  double dp(double rho) const;
  /// Pressure potential P(rho; rho*). Polytropic laws use the closed form,
  /// tabulated laws adaptive Simpson quadrature (abs tol 1e-12).
  double potential(double rho, const PotentialContext& ctx) const;
  /// P'(rho; rho*), computed through the identity P'(rho) = (P(rho)+p(rho))/rho
  /// for tabulated laws and the closed form for polytropic ones.
  double dpotential(double rho, const PotentialContext& ctx) const;

  /// Evaluable range: (0, +inf) for polytropic, the closed hull for tabulated.
  double min_density() const;
  double max_density() const;
  bool is_tabulated() const { return kind_ == Kind::tabulated; }

  /// Short human-readable form for report echoes, e.g. "polytropic(K=1,gamma=2)".
  std::string describe() const;

private:
  enum class Kind { polytropic, tabulated };

  PressureLaw() = default;
  void check_domain(double rho) const;

  Kind kind_ = Kind::polytropic;
  double coefficient_ = 1.0;
  double exponent_ = 2.0;

  // Tabulated representation: nodes plus Fritsch-Carlson slopes.
  std::vector<double> rho_;
  std::vector<double> p_;
  std::vector<double> slope_;
  std::string source_;
};

/// P(rho; rho*) by adaptive Simpson quadrature on p(r)/r^2, regardless of the
/// law's kind. Tabulated laws route potential() through this; for polytropic
/// laws it provides the independent route against the closed form.
double potential_via_quadrature(const PressureLaw& law, double rho,
                                const PotentialContext& ctx,
                                double abs_tol = 1e-12, int max_depth = 40);

/// Adaptive Simpson integration of f on [lo, hi] to an absolute tolerance.
/// Throws QuadratureError if max_depth is reached before convergence.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, int max_depth);

}  // namespace fansub
