#pragma once

#include "reactive/field.hpp"
#include "reactive/vec3.hpp"

namespace reactive {

/// Pure Lorentz boost with velocity beta (in units of c).
class Boost {
 public:
  /// Rejects |beta| >= 1 - kMaxSpeedMargin.
  static constexpr double kMaxSpeedMargin = 1e-12;

  Boost() = default;
  explicit Boost(const Vec3& beta);

  const Vec3& beta() const { return beta_; }
  double gamma() const { return gamma_; }
  Boost inverse() const { return Boost(-beta_); }

 private:
  Vec3 beta_;
  double gamma_ = 1.0;
};

/// Coordinates of an event as seen from the frame moving with velocity beta c.
SpaceTimePoint boost_event(const SpaceTimePoint& p, const Boost& b, const UnitSystem& units);

/// Field as seen from the frame moving with velocity beta c.
EMField boost_field(const EMField& f, const Boost& b);

/// The source viewed from the moving frame: events are mapped back with the
/// inverse boost, evaluated, and the field is boosted forward.
FieldSource boosted_source(FieldSource source, const Boost& b, const UnitSystem& units);

}  // namespace reactive
