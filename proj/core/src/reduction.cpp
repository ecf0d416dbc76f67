#include "fansub/reduction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fansub/errors.hpp"

namespace fansub {

void SymmetricParameters::validate() const {
  if (!(0.0 < a && a < b))
    throw std::invalid_argument("symmetric parameters require 0 < a < b");
}

FanSubsolution reduce(const SymmetricParameters& params,
                      const SymmetricContactDatum& datum,
                      const PressureLaw& law, const PotentialContext& ctx) {
  params.validate();
  if (!datum.valid())
    throw DomainError("contact datum requires rho0 > 0 and u0 != 0");

  const double a = params.a;
  const double b = params.b;
  const double rho0 = datum.rho0;
  const double u0 = datum.u0;
  const double rho1 = params.rho1;
  if (!(rho1 > 0.0)) throw DensityError("rho1 must be positive");
  const double jump = rho1 - rho0;

  // rho2 = rho1 - (b/a) (rho1 - rho0); the fma keeps the identity
  // rho2 = rho0 - eps exact to the last bit when a sits on the dyadic ladder.
  const double rho2 = std::fma(-(b / a), jump, rho1);
  if (!(rho2 > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "derived rho2 = " << rho2 << " is not positive (rho1 must lie in (0, "
       << b * rho0 / (b - a) << "))";
    throw DensityError(os.str());
  }

  const double p0 = law.p(rho0);
  const double p1 = law.p(rho1);
  const double P0 = law.potential(rho0, ctx);
  const double P1 = law.potential(rho1, ctx);

  FanSubsolution sub;
  sub.partition.speeds = {-b, -a, a, b};
  auto [left, right] = boundary_states(datum, law, ctx);
  sub.left = left;
  sub.right = right;

  FanState& r1 = sub.interior[0];
  r1.rho = rho1;
  r1.m = {params.m11, -b * jump};
  r1.U = {-b * b * jump - p0 + params.q1, -b * (rho0 * u0 + params.m11)};
  r1.q = params.q1;
  r1.F = {0.0, -b * (params.q1 + P1 - p1 - 0.5 * rho0 * u0 * u0 - P0)};

  FanState& r2 = sub.interior[1];
  r2.rho = rho2;
  r2.m = {0.0, 0.0};
  r2.U = {-b * (b - a) * jump - p0 + params.q2, -(b - a) * params.m11 - b * rho0 * u0};
  r2.q = params.q2;
  r2.F = {0.0, 0.0};

  FanState& r3 = sub.interior[2];
  r3.rho = r1.rho;
  r3.m = {-r1.m.x, -r1.m.y};
  r3.U = r1.U;
  r3.q = r1.q;
  r3.F = {-r1.F.x, -r1.F.y};

  return sub;
}

}  // namespace fansub
