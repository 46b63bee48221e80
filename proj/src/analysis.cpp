#include "reactive/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "reactive/errors.hpp"

namespace reactive {

double poynting_residual_at(const FieldSource& source, const SpaceTimePoint& p, double h_t,
                            double h_x, const UnitSystem& units) {
  if (!(std::isfinite(h_t) && h_t > 0.0 && std::isfinite(h_x) && h_x > 0.0)) {
    throw InvalidArgument("residual steps h_t and h_x must be positive");
  }
  auto u_at = [&](double dt) { return energy_density(source.evaluate({p.r, p.t + dt})); };
  auto s_at = [&](const Vec3& dr) { return poynting(source.evaluate({p.r + dr, p.t})); };

  const double du_dt = (u_at(h_t) - u_at(-h_t)) / (2.0 * h_t);
  const double div_s = (s_at({h_x, 0, 0}).x - s_at({-h_x, 0, 0}).x +
                        s_at({0, h_x, 0}).y - s_at({0, -h_x, 0}).y +
                        s_at({0, 0, h_x}).z - s_at({0, 0, -h_x}).z) /
                       (2.0 * h_x);
  return du_dt + units.c() * div_s;
}

ResidualReport poynting_residual(const FieldSource& source, const SpaceTimePoint& p, double h_t,
                                 double h_x, const UnitSystem& units) {
  ResidualReport report{p, h_t, h_x, 0.0, 0.0, 0.0};
  report.residual = poynting_residual_at(source, p, h_t, h_x, units);
  report.residual_half = poynting_residual_at(source, p, 0.5 * h_t, 0.5 * h_x, units);
  report.ratio = report.residual_half != 0.0 ? report.residual / report.residual_half
                                             : std::numeric_limits<double>::quiet_NaN();
  return report;
}

ResidualSteps default_residual_steps(double omega, const UnitSystem& units) {
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw InvalidArgument("omega must be positive");
  }
  const double k = omega / units.c();
  const double h_x = 1e-3 * std::min(1.0 / omega, 1.0 / k);
  return {h_x / (2.0 * units.c()), h_x};
}

InvariantPair cross_invariants(const EMField& f1, const EMField& f2) {
  return {2.0 * (dot(f1.e, f2.e) - dot(f1.b, f2.b)), dot(f1.e, f2.b) + dot(f2.e, f1.b)};
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("least squares needs two equally long series of >= 2 points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (!(sxx > 0.0)) {
    throw InvalidArgument("least squares needs distinct abscissae");
  }
  return sxy / sxx;
}

DecayResult decay_exponent(const FieldSource& source, const Vec3& direction,
                           std::span<const double> radii, const DecayTiming& timing,
                           const UnitSystem& units) {
  if (radii.size() < 4) {
    throw InvalidArgument("decay measurement needs at least 4 radii");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(std::isfinite(radii[i]) && radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw InvalidArgument("decay radii must be positive and strictly increasing");
    }
  }
  if (!is_finite(direction) || std::abs(norm(direction) - 1.0) > 1e-12) {
    throw InvalidArgument("decay direction must be a unit vector");
  }

  DecayResult out;
  out.radii.assign(radii.begin(), radii.end());
  std::vector<double> log_r;
  std::vector<double> log_u;
  std::vector<double> log_rd;
  bool reactive_positive = true;
  for (double r : radii) {
    const double t = timing.retarded ? timing.time + r / units.c() : timing.time;
    const EMField f = source.evaluate({r * direction, t});
    const double u = energy_density(f);
    const double rd = reactive_density_direct(f);
    if (!(u >= 1e-280)) {
      std::ostringstream msg;
      msg << "energy density " << u << " at r = " << r
          << " is too small for a log fit; use smaller radii";
      throw UnderflowError(msg.str());
    }
    out.u.push_back(u);
    out.r_density.push_back(rd);
    log_r.push_back(std::log(r));
    log_u.push_back(std::log(u));
    reactive_positive = reactive_positive && rd > 0.0;
    log_rd.push_back(rd > 0.0 ? std::log(rd) : 0.0);
  }
  out.slope_u = least_squares_slope(log_r, log_u);
  if (reactive_positive) {
    out.slope_r = least_squares_slope(log_r, log_rd);
  }
  return out;
}

AveragedFlow time_averaged_flow_velocity(const FieldSource& source, const Vec3& r, double omega,
                                         const UnitSystem& units, std::size_t quadrature_points,
                                         double t_start) {
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw InvalidArgument("averaging omega must be positive");
  }
  if (quadrature_points < 16) {
    throw InvalidArgument("period average needs at least 16 quadrature points");
  }
  const double period = 2.0 * std::numbers::pi / omega;
  const double n = static_cast<double>(quadrature_points);

  // Periodic trapezoid rule: the endpoint t_start + period is the same sample
  // as t_start, so each node carries weight 1/n.
  AveragedFlow out;
  for (std::size_t j = 0; j < quadrature_points; ++j) {
    const EMField f = source.evaluate({r, t_start + period * static_cast<double>(j) / n});
    out.mean_u += energy_density(f);
    out.mean_s += poynting(f);
  }
  out.mean_u /= n;
  out.mean_s = out.mean_s / n;
  if (out.mean_u > kVelocityEnergyFloor) {
    out.v = (units.c() / out.mean_u) * out.mean_s;
    out.defined = true;
  }
  return out;
}

}  // namespace reactive
