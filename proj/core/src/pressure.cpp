#include "fansub/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fansub/errors.hpp"

namespace fansub {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Fritsch-Carlson slope limiting for strictly increasing data. Interior
// slopes start from the harmonic mean of adjacent secants, endpoints from the
// one-sided three-point formula clamped into [0, 3*secant].
std::vector<double> monotone_slopes(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);

  std::vector<double> m(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w1 = 2.0 * (x[i + 1] - x[i]) + (x[i] - x[i - 1]);
    const double w2 = (x[i + 1] - x[i]) + 2.0 * (x[i] - x[i - 1]);
    m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
  }
  auto endpoint = [&](std::size_t i0, std::size_t i1, std::size_t i2) {
    const double h0 = x[i1] - x[i0];
    const double h1 = x[i2] - x[i1];
    const double s0 = (y[i1] - y[i0]) / h0;
    const double s1 = (y[i2] - y[i1]) / h1;
    double m0 = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (m0 < 0.0) m0 = 0.0;
    if (m0 > 3.0 * s0) m0 = 3.0 * s0;
    return m0;
  };
  m.front() = endpoint(0, 1, 2);
  m.back() = endpoint(n - 1, n - 2, n - 3);

  // Circle restriction: keep (alpha, beta) inside radius 3 of the origin.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double alpha = m[i] / d[i];
    const double beta = m[i + 1] / d[i];
    const double r2 = alpha * alpha + beta * beta;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      m[i] = tau * alpha * d[i];
      m[i + 1] = tau * beta * d[i];
    }
  }
  return m;
}

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double fm, double whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0)
    throw QuadratureError("adaptive Simpson quadrature did not converge on [" +
                          fmt(a) + ", " + fmt(b) + "]");
  return adaptive_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, int max_depth) {
  if (lo == hi) return 0.0;
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  const double flo = f(lo);
  const double fhi = f(hi);
  const double fm = f(0.5 * (lo + hi));
  const double whole = simpson(lo, flo, hi, fhi, fm);
  return sign * adaptive_step(f, lo, flo, hi, fhi, fm, whole, abs_tol, max_depth);
}

PressureLaw PressureLaw::polytropic(double coefficient, double exponent) {
  if (!(coefficient > 0.0))
    throw DomainError("polytropic coefficient K must be positive, got " +
                      fmt(coefficient));
  if (!(exponent >= 1.0))
    throw DomainError("polytropic exponent gamma must be >= 1, got " +
                      fmt(exponent));
  PressureLaw law;
  law.kind_ = Kind::polytropic;
  law.coefficient_ = coefficient;
  law.exponent_ = exponent;
  return law;
}

PressureLaw PressureLaw::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 4)
    throw DomainError("tabulated law needs at least 4 samples, got " +
                      std::to_string(samples.size()));
  PressureLaw law;
  law.kind_ = Kind::tabulated;
  law.rho_.reserve(samples.size());
  law.p_.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [rho, p] = samples[i];
    if (!(rho > 0.0))
      throw DomainError("tabulated sample rho must be positive, got " + fmt(rho) +
                        " at row " + std::to_string(i));
    if (!(p > 0.0))
      throw DomainError("tabulated sample p must be positive, got " + fmt(p) +
                        " at row " + std::to_string(i));
    if (i > 0 && !(rho > samples[i - 1].first))
      throw DomainError("tabulated rho must be strictly increasing at row " +
                        std::to_string(i));
    if (i > 0 && !(p > samples[i - 1].second))
      throw DomainError("tabulated p must be strictly increasing at row " +
                        std::to_string(i));
    law.rho_.push_back(rho);
    law.p_.push_back(p);
  }
  law.slope_ = monotone_slopes(law.rho_, law.p_);

  // The interpolant must stay strictly increasing inside the hull.
  for (std::size_t i = 0; i + 1 < law.rho_.size(); ++i) {
    for (int k = 0; k <= 4; ++k) {
      const double r = law.rho_[i] + (law.rho_[i + 1] - law.rho_[i]) * (0.125 + 0.1875 * k);
      if (!(law.dp(r) > 0.0))
        throw DomainError("tabulated interpolant is not strictly increasing near rho=" +
                          fmt(r));
    }
  }
  return law;
}

PressureLaw PressureLaw::tabulated_from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tabulated pressure CSV: " + path.string());
  std::vector<std::pair<double, double>> samples;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double rho, p;
    if (!(ls >> rho >> p)) {
      if (row == 1) continue;  // header
      throw IoError("cannot parse row " + std::to_string(row) + " of " + path.string());
    }
    samples.emplace_back(rho, p);
  }
  PressureLaw law = tabulated(std::move(samples));
  law.source_ = path.string();
  return law;
}

void PressureLaw::check_domain(double rho) const {
  if (!(rho > 0.0))
    throw DomainError("density must be positive, got " + fmt(rho));
  if (kind_ == Kind::tabulated && (rho < rho_.front() || rho > rho_.back()))
    throw DomainError("density " + fmt(rho) + " outside tabulated hull [" +
                      fmt(rho_.front()) + ", " + fmt(rho_.back()) + "]");
}

double PressureLaw::p(double rho) const {
  check_domain(rho);
  if (kind_ == Kind::polytropic) return coefficient_ * std::pow(rho, exponent_);
  const auto it = std::upper_bound(rho_.begin(), rho_.end(), rho);
  const std::size_t i = std::min<std::size_t>(
      rho_.size() - 2, it == rho_.begin() ? 0 : (it - rho_.begin()) - 1);
  const double h = rho_[i + 1] - rho_[i];
  const double t = (rho - rho_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * p_[i] + h10 * h * slope_[i] + h01 * p_[i + 1] + h11 * h * slope_[i + 1];
}

double PressureLaw::dp(double rho) const {
  check_domain(rho);
  if (kind_ == Kind::polytropic)
    return coefficient_ * exponent_ * std::pow(rho, exponent_ - 1.0);
  const auto it = std::upper_bound(rho_.begin(), rho_.end(), rho);
  const std::size_t i = std::min<std::size_t>(
      rho_.size() - 2, it == rho_.begin() ? 0 : (it - rho_.begin()) - 1);
  const double h = rho_[i + 1] - rho_[i];
  const double t = (rho - rho_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6.0 * t2 - 6.0 * t) / h;
  const double dh10 = 3.0 * t2 - 4.0 * t + 1.0;
  const double dh01 = (-6.0 * t2 + 6.0 * t) / h;
  const double dh11 = 3.0 * t2 - 2.0 * t;
  return dh00 * p_[i] + dh10 * slope_[i] + dh01 * p_[i + 1] + dh11 * slope_[i + 1];
}

double PressureLaw::potential(double rho, const PotentialContext& ctx) const {
  check_domain(rho);
  check_domain(ctx.rho_star);
  if (kind_ == Kind::tabulated) return potential_via_quadrature(*this, rho, ctx);
  const double K = coefficient_;
  const double g = exponent_;
  if (g == 1.0) return K * rho * std::log(rho / ctx.rho_star);
  return K * (std::pow(rho, g) - rho * std::pow(ctx.rho_star, g - 1.0)) / (g - 1.0);
}

double PressureLaw::dpotential(double rho, const PotentialContext& ctx) const {
  check_domain(rho);
  check_domain(ctx.rho_star);
  if (kind_ == Kind::tabulated) return (potential(rho, ctx) + p(rho)) / rho;
  const double K = coefficient_;
  const double g = exponent_;
  if (g == 1.0) return K * (std::log(rho / ctx.rho_star) + 1.0);
  return K * (g * std::pow(rho, g - 1.0) - std::pow(ctx.rho_star, g - 1.0)) / (g - 1.0);
}

double PressureLaw::min_density() const {
  return kind_ == Kind::tabulated ? rho_.front() : 0.0;
}

double PressureLaw::max_density() const {
  return kind_ == Kind::tabulated ? rho_.back()
                                  : std::numeric_limits<double>::infinity();
}

std::string PressureLaw::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::polytropic) {
    os << "polytropic(K=" << coefficient_ << ",gamma=" << exponent_ << ")";
  } else {
    os << "tabulated(" << rho_.size() << " samples, hull [" << rho_.front() << ", "
       << rho_.back() << "]";
    if (!source_.empty()) os << ", " << source_;
    os << ")";
  }
  return os.str();
}

double potential_via_quadrature(const PressureLaw& law, double rho,
                                const PotentialContext& ctx, double abs_tol,
                                int max_depth) {
  if (rho == ctx.rho_star) return 0.0;
  const double integral = adaptive_simpson(
      [&law](double r) { return law.p(r) / (r * r); }, ctx.rho_star, rho, abs_tol,
      max_depth);
  return rho * integral;
}

}  // namespace fansub
