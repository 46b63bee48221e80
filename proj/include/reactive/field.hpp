#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reactive/vec3.hpp"

namespace reactive {

struct SpaceTimePoint {
  Vec3 r;
  double t = 0.0;

  friend constexpr bool operator==(const SpaceTimePoint&, const SpaceTimePoint&) = default;
};

/// Electric and magnetic field sampled at one event. Heaviside-Lorentz units,
/// so both vectors share a unit and U = (E^2 + B^2) / 2.
struct EMField {
  Vec3 e;
  Vec3 b;

  friend constexpr bool operator==(const EMField&, const EMField&) = default;
};

constexpr EMField operator+(const EMField& a, const EMField& b) { return {a.e + b.e, a.b + b.b}; }
constexpr EMField operator-(const EMField& a) { return {-a.e, -a.b}; }
constexpr EMField operator*(double s, const EMField& f) { return {s * f.e, s * f.b}; }

inline bool is_finite(const EMField& f) { return is_finite(f.e) && is_finite(f.b); }

/// Carries the speed of light explicitly; everything else is dimensionless.
class UnitSystem {
 public:
  UnitSystem() = default;
  explicit UnitSystem(double c);

  double c() const { return c_; }

 private:
  double c_ = 1.0;
};

/// A deterministic map from events to field samples.
///
/// Sources are cheap to copy: the evaluator is a std::function whose captured
/// state is immutable, so copies may be sampled concurrently.
class FieldSource {
 public:
  using Evaluator = std::function<EMField(const SpaceTimePoint&)>;

  FieldSource(Evaluator evaluator, std::string name, bool source_free);

  EMField evaluate(const SpaceTimePoint& p) const { return evaluator_(p); }
  EMField operator()(const SpaceTimePoint& p) const { return evaluator_(p); }

  const std::string& name() const { return name_; }
  bool source_free() const { return source_free_; }

 private:
  Evaluator evaluator_;
  std::string name_;
  bool source_free_;
};

/// Source whose value is identically zero.
FieldSource zero_source();

/// Pointwise sum of the given sources. Throws InvalidArgument on an empty list.
FieldSource superpose(std::span<const FieldSource> sources);
FieldSource superpose(std::initializer_list<FieldSource> sources);

/// The source with both fields negated.
FieldSource negated(FieldSource source);

}  // namespace reactive
