#include "reactive/sources.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "reactive/errors.hpp"

namespace reactive {

void PlaneWaveSpec::validate() const {
  if (!std::isfinite(amplitude)) {
    throw InvalidArgument("plane wave amplitude must be finite");
  }
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw InvalidArgument("plane wave omega must be positive");
  }
  if (direction != Propagation::kForward && direction != Propagation::kBackward) {
    throw InvalidArgument("plane wave direction must be +1 or -1");
  }
  if (!is_finite(polarization) || std::abs(polarization.z) > 1e-12 ||
      std::abs(norm(polarization) - 1.0) > 1e-12) {
    throw InvalidArgument("plane wave polarization must be a unit vector orthogonal to z");
  }
}

FieldSource traveling_plane_wave(const PlaneWaveSpec& spec, const UnitSystem& units) {
  spec.validate();
  const double k = spec.omega / units.c();
  const double sign = static_cast<int>(spec.direction);
  const Vec3 e_dir = spec.polarization;
  const Vec3 b_dir = sign * cross(kUnitZ, spec.polarization);
  const double amplitude = spec.amplitude;
  const double omega = spec.omega;

  std::ostringstream name;
  name << "plane_wave(" << (sign > 0 ? "+z" : "-z") << ",A=" << amplitude << ",omega=" << omega
       << ")";
  auto evaluator = [=](const SpaceTimePoint& p) {
    const double phase = amplitude * std::cos(k * p.r.z - sign * omega * p.t);
    return EMField{phase * e_dir, phase * b_dir};
  };
  return FieldSource(std::move(evaluator), name.str(), true);
}

FieldSource standing_plane_wave(double amplitude, double omega, const UnitSystem& units) {
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw InvalidArgument("standing wave omega must be positive");
  }
  const PlaneWaveSpec forward{amplitude, omega, Propagation::kForward, kUnitX};
  const PlaneWaveSpec backward{amplitude, omega, Propagation::kBackward, kUnitX};
  return superpose({traveling_plane_wave(forward, units), traveling_plane_wave(backward, units)});
}

FieldSource electric_dipole(DipoleWaveform waveform, const UnitSystem& units) {
  if (!waveform.p || !waveform.p_dot || !waveform.p_ddot) {
    throw InvalidArgument("dipole waveform must supply p, p_dot and p_ddot");
  }
  const double c = units.c();
  std::string name = "electric_dipole(" + waveform.name + ")";
  auto evaluator = [w = std::move(waveform), c](const SpaceTimePoint& p) {
    const double r = norm(p.r);
    if (!(r > 0.0)) {
      throw SingularityError("electric dipole evaluated at its origin");
    }
    const Vec3 n = p.r / r;
    const double t_ret = p.t - r / c;
    const double m = w.p(t_ret);
    const double m_dot = w.p_dot(t_ret);
    const double m_ddot = w.p_ddot(t_ret);

    constexpr double kNorm = 1.0 / (4.0 * std::numbers::pi);
    const double near = m / (r * r * r) + m_dot / (c * r * r);
    const double induction = m_dot / (c * r * r);
    const double radiation = m_ddot / (c * c * r);

    const Vec3 static_pattern = 3.0 * n.z * n - kUnitZ;  // 3n(n.z) - z
    const Vec3 transverse = n.z * n - kUnitZ;            // n x (n x z)
    const Vec3 azimuthal = cross(kUnitZ, n);

    return EMField{kNorm * (near * static_pattern + radiation * transverse),
                   (kNorm * (induction + radiation)) * azimuthal};
  };
  return FieldSource(std::move(evaluator), std::move(name), false);
}

DipoleWaveform gaussian_waveform(double amplitude, double tau, double omega0, double t0) {
  if (!(std::isfinite(tau) && tau > 0.0)) {
    throw InvalidArgument("gaussian waveform tau must be positive");
  }
  if (!std::isfinite(amplitude) || !std::isfinite(omega0) || omega0 < 0.0 || !std::isfinite(t0)) {
    throw InvalidArgument("gaussian waveform needs finite amplitude, t0 and omega0 >= 0");
  }
  const double inv_tau2 = 1.0 / (tau * tau);

  // g = exp(-s^2/tau^2), h = cos(omega0 s); p = A g h and its derivatives.
  auto p = [=](double t) {
    const double s = t - t0;
    return amplitude * std::exp(-s * s * inv_tau2) * std::cos(omega0 * s);
  };
  auto p_dot = [=](double t) {
    const double s = t - t0;
    const double g = std::exp(-s * s * inv_tau2);
    const double dg = -2.0 * s * inv_tau2 * g;
    return amplitude * (dg * std::cos(omega0 * s) - g * omega0 * std::sin(omega0 * s));
  };
  auto p_ddot = [=](double t) {
    const double s = t - t0;
    const double g = std::exp(-s * s * inv_tau2);
    const double dg = -2.0 * s * inv_tau2 * g;
    const double ddg = (4.0 * s * s * inv_tau2 * inv_tau2 - 2.0 * inv_tau2) * g;
    const double h = std::cos(omega0 * s);
    const double dh = -omega0 * std::sin(omega0 * s);
    const double ddh = -omega0 * omega0 * h;
    return amplitude * (ddg * h + 2.0 * dg * dh + g * ddh);
  };

  std::ostringstream name;
  name << "gaussian(A=" << amplitude << ",tau=" << tau << ",omega0=" << omega0 << ",t0=" << t0
       << ")";
  return {p, p_dot, p_ddot, name.str()};
}

DipoleWaveform static_waveform(double p0) {
  if (!std::isfinite(p0)) {
    throw InvalidArgument("static dipole moment must be finite");
  }
  std::ostringstream name;
  name << "static(p=" << p0 << ")";
  return {[p0](double) { return p0; }, [](double) { return 0.0; }, [](double) { return 0.0; },
          name.str()};
}

}  // namespace reactive
