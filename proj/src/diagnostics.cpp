#include "reactive/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reactive/errors.hpp"

namespace reactive {
namespace {

// Double-double accumulator. U and |S| agree to every printed digit near a
// null point, so U^2 - |S|^2 cancels catastrophically in plain double and the
// square root turns eps * U^2 of rounding into sqrt(eps) * U of error.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble squared_norm_dd(const Vec3& a) {
  return two_prod(a.x, a.x) + two_prod(a.y, a.y) + two_prod(a.z, a.z);
}

}  // namespace

double energy_density(const EMField& f) { return 0.5 * (norm2(f.e) + norm2(f.b)); }

Vec3 poynting(const EMField& f) { return cross(f.e, f.b); }

double reactive_radicand(const EMField& f) {
  const DoubleDouble half{0.5, 0.0};
  const DoubleDouble u = half * (squared_norm_dd(f.e) + squared_norm_dd(f.b));
  const DoubleDouble sx = two_prod(f.e.y, f.b.z) - two_prod(f.e.z, f.b.y);
  const DoubleDouble sy = two_prod(f.e.z, f.b.x) - two_prod(f.e.x, f.b.z);
  const DoubleDouble sz = two_prod(f.e.x, f.b.y) - two_prod(f.e.y, f.b.x);
  const DoubleDouble diff = u * u - (sx * sx + sy * sy + sz * sz);
  return diff.hi + diff.lo;
}

double reactive_density_direct(const EMField& f) {
  const double radicand = reactive_radicand(f);
  if (radicand >= 0.0) {
    return std::sqrt(radicand);
  }
  const double u = energy_density(f);
  if (radicand >= -kRadicandClampRel * u * u) {
    return 0.0;
  }
  std::ostringstream msg;
  msg << "internal consistency: U^2 - |S|^2 = " << radicand << " is negative for U = " << u;
  throw ConsistencyError(msg.str());
}

double reactive_density_invariant(const EMField& f) {
  const InvariantPair inv = invariants(f);
  return std::sqrt(0.25 * inv.i1 * inv.i1 + inv.i2 * inv.i2);
}

InvariantPair invariants(const EMField& f) {
  return {norm2(f.e) - norm2(f.b), dot(f.e, f.b)};
}

bool is_null(const EMField& f, double tol) {
  if (!(tol >= 0.0)) {
    throw InvalidArgument("is_null tolerance must be nonnegative");
  }
  const double scale = norm2(f.e) + norm2(f.b);
  const InvariantPair inv = invariants(f);
  return std::abs(inv.i1) <= tol * scale && std::abs(inv.i2) <= tol * scale;
}

double inertia_density(const EMField& f, const UnitSystem& units) {
  return reactive_density_direct(f) / (units.c() * units.c());
}

FlowVelocity flow_velocity(const EMField& f, const UnitSystem& units) {
  const double u = energy_density(f);
  if (!(u > kVelocityEnergyFloor)) {
    return {};
  }
  return {(units.c() / u) * poynting(f), true};
}

DiagnosticSample diagnose(const EMField& f, const UnitSystem& units) {
  DiagnosticSample d;
  d.u = energy_density(f);
  d.s = poynting(f);
  d.r_density = reactive_density_direct(f);
  d.inertia = d.r_density / (units.c() * units.c());
  const FlowVelocity flow = flow_velocity(f, units);
  d.v = flow.v;
  d.v_defined = flow.defined;
  return d;
}

}  // namespace reactive
