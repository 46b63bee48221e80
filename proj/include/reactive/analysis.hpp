#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reactive/diagnostics.hpp"
#include "reactive/field.hpp"

namespace reactive {

/// Central-difference estimate of dU/dt + c div S at one event, at steps
/// (h_t, h_x) and again at half steps. J = 0 is assumed, so on an exact
/// source-free solution the value is pure truncation error and the ratio
/// approaches 4.
struct ResidualReport {
  SpaceTimePoint point;
  double h_t = 0.0;
  double h_x = 0.0;
  double residual = 0.0;
  double residual_half = 0.0;
  double ratio = 0.0;  // residual / residual_half, NaN when residual_half == 0
};

/// Single-step residual with a 7-point stencil (+-h_t in time, +-h_x along each axis).
double poynting_residual_at(const FieldSource& source, const SpaceTimePoint& p, double h_t,
                            double h_x, const UnitSystem& units);

ResidualReport poynting_residual(const FieldSource& source, const SpaceTimePoint& p, double h_t,
                                 double h_x, const UnitSystem& units);

/// Default steps for an oscillatory source: h_x = 1e-3 min(1/omega, 1/k) and
/// h_t = h_x / (2c). The time step is deliberately not h_x / c: at that ratio
/// the central difference transports 1-D waves exactly and the truncation
/// term needed for the convergence ratio vanishes.
struct ResidualSteps {
  double h_t = 0.0;
  double h_x = 0.0;
};
ResidualSteps default_residual_steps(double omega, const UnitSystem& units);

/// Cross-term part of the invariants of f1 + f2:
/// (2 (E1.E2 - B1.B2), E1.B2 + E2.B1).
InvariantPair cross_invariants(const EMField& f1, const EMField& f2);

/// How each radius of a decay measurement picks its sampling time.
struct DecayTiming {
  double time = 0.0;
  /// When true, radius r is sampled at time + r / c (retarded peak of a pulse
  /// centred on `time`); otherwise every radius uses `time`.
  bool retarded = false;
};

struct DecayResult {
  std::vector<double> radii;
  std::vector<double> u;
  std::vector<double> r_density;
  double slope_u = 0.0;
  /// Absent when some sampled reactive density is exactly zero (null fields).
  std::optional<double> slope_r;
};

/// Least-squares slopes of log U and log R against log r along a ray from the
/// origin. Needs >= 4 strictly increasing positive radii; throws
/// UnderflowError if any U falls below 1e-280.
DecayResult decay_exponent(const FieldSource& source, const Vec3& direction,
                           std::span<const double> radii, const DecayTiming& timing,
                           const UnitSystem& units);

/// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

struct AveragedFlow {
  Vec3 v;
  bool defined = false;
  double mean_u = 0.0;
  Vec3 mean_s;
};

/// c <S> / <U> with both averages taken by the periodic trapezoid rule over
/// one period 2 pi / omega starting at t_start.
AveragedFlow time_averaged_flow_velocity(const FieldSource& source, const Vec3& r, double omega,
                                         const UnitSystem& units, std::size_t quadrature_points = 64,
                                         double t_start = 0.0);

}  // namespace reactive
