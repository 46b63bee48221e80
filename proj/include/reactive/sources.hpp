#pragma once

#include <functional>
#include <string>

#include "reactive/field.hpp"
#include "reactive/vec3.hpp"

namespace reactive {

enum class Propagation : int { kForward = +1, kBackward = -1 };

/// Monochromatic plane wave travelling along +z or -z.
struct PlaneWaveSpec {
  double amplitude = 1.0;
  double omega = 1.0;
  Propagation direction = Propagation::kForward;
  Vec3 polarization = kUnitX;  // unit, transverse to z

  /// Throws InvalidArgument if omega <= 0 or the polarization is not a
  /// transverse unit vector.
  void validate() const;
};

/// Scalar dipole moment p(t) along z with its first two time derivatives.
/// The derivatives are supplied in closed form by the factory.
struct DipoleWaveform {
  std::function<double(double)> p;
  std::function<double(double)> p_dot;
  std::function<double(double)> p_ddot;
  std::string name;
};

/// E = pol A cos(kz -+ wt), B = +-(z x pol) A cos(kz -+ wt), k = w / c.
FieldSource traveling_plane_wave(const PlaneWaveSpec& spec, const UnitSystem& units);

/// Sum of the forward and backward x-polarized waves of equal amplitude.
FieldSource standing_plane_wave(double amplitude, double omega, const UnitSystem& units);

/// Retarded field of a point electric dipole p(t) z at the origin, including
/// the static, induction and radiation terms. Throws SingularityError at r = 0.
FieldSource electric_dipole(DipoleWaveform waveform, const UnitSystem& units);

/// p(t) = A exp(-((t - t0) / tau)^2) cos(omega0 (t - t0)).
DipoleWaveform gaussian_waveform(double amplitude, double tau, double omega0, double t0);

/// Time-independent moment p(t) = p0.
DipoleWaveform static_waveform(double p0);

}  // namespace reactive
