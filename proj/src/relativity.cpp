#include "reactive/relativity.hpp"

#include <cmath>
#include <sstream>

#include "reactive/errors.hpp"

namespace reactive {

Boost::Boost(const Vec3& beta) : beta_(beta) {
  if (!is_finite(beta)) {
    throw InvalidArgument("boost velocity must be finite");
  }
  const double speed2 = norm2(beta);
  if (std::sqrt(speed2) >= 1.0 - kMaxSpeedMargin) {
    throw InvalidArgument("boost speed |beta| must be below 1");
  }
  gamma_ = 1.0 / std::sqrt(1.0 - speed2);
}

SpaceTimePoint boost_event(const SpaceTimePoint& p, const Boost& b, const UnitSystem& units) {
  const double c = units.c();
  const Vec3& beta = b.beta();
  const double gamma = b.gamma();
  const double beta2 = norm2(beta);
  const double beta_dot_r = dot(beta, p.r);

  // t' = gamma (t - beta.r / c); r' = r + ((gamma - 1) (beta.r) / beta^2 - gamma ct) beta
  const double t_prime = gamma * (p.t - beta_dot_r / c);
  const double parallel = beta2 > 0.0 ? (gamma - 1.0) * beta_dot_r / beta2 : 0.0;
  return {p.r + (parallel - gamma * c * p.t) * beta, t_prime};
}

EMField boost_field(const EMField& f, const Boost& b) {
  const Vec3& beta = b.beta();
  const double gamma = b.gamma();
  // gamma^2 / (gamma + 1) strips the parallel component back to its unboosted value.
  const double k = gamma * gamma / (gamma + 1.0);
  return {gamma * (f.e + cross(beta, f.b)) - (k * dot(beta, f.e)) * beta,
          gamma * (f.b - cross(beta, f.e)) - (k * dot(beta, f.b)) * beta};
}

FieldSource boosted_source(FieldSource source, const Boost& b, const UnitSystem& units) {
  std::ostringstream name;
  name << "boosted(" << source.name() << ",beta=" << b.beta() << ")";
  const bool source_free = source.source_free();
  const Boost back = b.inverse();
  auto evaluator = [s = std::move(source), b, back, units](const SpaceTimePoint& p_moving) {
    return boost_field(s.evaluate(boost_event(p_moving, back, units)), b);
  };
  return FieldSource(std::move(evaluator), name.str(), source_free);
}

}  // namespace reactive
