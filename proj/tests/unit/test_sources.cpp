#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "reactive/diagnostics.hpp"
#include "reactive/errors.hpp"
#include "reactive/sources.hpp"

using namespace reactive;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

FieldSource forward_x(double amplitude = 1.0, double omega = 1.0, const UnitSystem& u = {}) {
  return traveling_plane_wave({amplitude, omega, Propagation::kForward, kUnitX}, u);
}

}  // namespace

TEST_CASE("traveling plane wave examples") {
  const EMField f = forward_x().evaluate({{0, 0, 0}, 0.0});
  CHECK(f.e == Vec3{1, 0, 0});
  CHECK(f.b == Vec3{0, 1, 0});

  const EMField zero = forward_x().evaluate({{0, 0, kPi / 2}, 0.0});
  CHECK(norm(zero.e) < 1e-16);
  CHECK(norm(zero.b) < 1e-16);

  // Backward wave: B flips so that S points along -z.
  const FieldSource back = traveling_plane_wave({2.0, 1.0, Propagation::kBackward, kUnitY}, {});
  const EMField g = back.evaluate({{0, 0, 0}, 0.0});
  CHECK(g.e == Vec3{0, 2, 0});
  CHECK(g.b == Vec3{2, 0, 0});
  CHECK(poynting(g).z < 0.0);
}

TEST_CASE("plane wave parameter validation") {
  const UnitSystem u;
  CHECK_THROWS_AS(traveling_plane_wave({1.0, 0.0, Propagation::kForward, kUnitX}, u), InvalidArgument);
  CHECK_THROWS_AS(traveling_plane_wave({1.0, -2.0, Propagation::kForward, kUnitX}, u), InvalidArgument);
  CHECK_THROWS_AS(traveling_plane_wave({1.0, 1.0, Propagation::kForward, kUnitZ}, u), InvalidArgument);
  CHECK_THROWS_AS(traveling_plane_wave({1.0, 1.0, Propagation::kForward, {2, 0, 0}}, u), InvalidArgument);
  CHECK_THROWS_AS(standing_plane_wave(1.0, 0.0, u), InvalidArgument);
  const double s = std::sqrt(0.5);
  CHECK_NOTHROW(traveling_plane_wave({1.0, 1.0, Propagation::kForward, {s, s, 0}}, u));
}

TEST_CASE("property: traveling waves are null and S follows the propagation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> box(-20, 20);
  std::uniform_real_distribution<double> angle(0, 2 * kPi);
  for (int dir : {+1, -1}) {
    for (int i = 0; i < 2000; ++i) {
      const double a = angle(rng);
      const UnitSystem units(0.5 + (i % 5));
      const FieldSource w = traveling_plane_wave(
          {1.5, 0.3 + (i % 3), static_cast<Propagation>(dir), {std::cos(a), std::sin(a), 0}}, units);
      const EMField f = w.evaluate({{box(rng), box(rng), box(rng)}, box(rng)});
      const double u = energy_density(f);
      CHECK(std::abs(dot(f.e, f.b)) <= 1e-14 * (1 + u));
      CHECK(reactive_density_direct(f) <= 1e-14 * u);
      const Vec3 s = poynting(f);
      CHECK(s.z * dir >= 0.0);
      CHECK(std::hypot(s.x, s.y) <= 1e-14 * (1 + u));
    }
  }
}

TEST_CASE("standing wave examples") {
  const FieldSource sw = standing_plane_wave(1.0, 1.0, {});
  const EMField origin = sw.evaluate({{0, 0, 0}, 0.0});
  CHECK(energy_density(origin) == 2.0);
  CHECK(poynting(origin) == Vec3{});

  const DiagnosticSample d = diagnose(sw.evaluate({{0, 0, kPi / 4}, kPi / 4}), {});
  CHECK(d.u == Approx(1.0).epsilon(1e-15));
  CHECK(norm(d.s - kUnitZ) < 1e-15);
  CHECK(d.r_density < 1e-15);
  CHECK(norm(d.v) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("property: standing wave closed forms with c != 1") {
  const double amp = 1.7, omega = 2.3, c = 1.9, k = omega / c;
  const FieldSource sw = standing_plane_wave(amp, omega, UnitSystem(c));
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double z = 2 * kPi / k * i / 199.0;
      const double t = 2 * kPi / omega * j / 199.0;
      const double cm = std::cos(k * z - omega * t), cp = std::cos(k * z + omega * t);
      const DiagnosticSample d = diagnose(sw.evaluate({{0, 0, z}, t}), UnitSystem(c));
      const double a2 = amp * amp;
      CHECK(std::abs(d.u - a2 * (cm * cm + cp * cp)) <= 1e-12 * a2);
      CHECK(std::abs(d.s.z - a2 * (cm * cm - cp * cp)) <= 1e-12 * a2);
      CHECK(std::abs(d.r_density - 2 * a2 * std::abs(cm * cp)) <= 1e-12 * a2);
    }
  }
}

TEST_CASE("gaussian waveform") {
  const DipoleWaveform w = gaussian_waveform(1.0, 0.5, 0.0, 2.0);
  CHECK(w.p(2.0) == 1.0);
  CHECK(w.p_dot(2.0) == 0.0);
  CHECK(w.p_ddot(2.0) == Approx(-2.0 / 0.25));
  CHECK_THROWS_AS(gaussian_waveform(1.0, 0.0, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(gaussian_waveform(1.0, -1.0, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(gaussian_waveform(1.0, 1.0, -1.0, 0.0), InvalidArgument);
}

TEST_CASE("property: gaussian derivatives agree with central differences at second order") {
  // Richardson check: halving h must cut the central-difference error by ~4.
  const DipoleWaveform w = gaussian_waveform(1.3, 0.8, 5.0, 0.4);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> time(-2.0, 2.8);
  const double h = 1e-3;
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const double t = time(rng);
    auto d1 = [&](const std::function<double(double)>& f, double step) {
      return (f(t + step) - f(t - step)) / (2 * step);
    };
    const double e1 = std::abs(d1(w.p, h) - w.p_dot(t));
    const double e2 = std::abs(d1(w.p, h / 2) - w.p_dot(t));
    const double f1 = std::abs(d1(w.p_dot, h) - w.p_ddot(t));
    const double f2 = std::abs(d1(w.p_dot, h / 2) - w.p_ddot(t));
    CHECK(e1 <= 100.0 * h * h);
    CHECK(f1 <= 2000.0 * h * h);
    if (e1 > 1e-8) {
      CHECK(e1 / e2 == Approx(4.0).epsilon(0.05));
      ++checked;
    }
    if (f1 > 1e-7) CHECK(f1 / f2 == Approx(4.0).epsilon(0.05));
  }
  CHECK(checked > 50);
}

TEST_CASE("static dipole limit") {
  const UnitSystem units;
  const FieldSource d = electric_dipole(static_waveform(1.0), units);
  CHECK_FALSE(d.source_free());
  for (double r : {0.5, 1.0, 3.0}) {
    const EMField on_axis = d.evaluate({{0, 0, r}, 0.7});
    CHECK(on_axis.e.z == Approx(2.0 / (4 * kPi * r * r * r)).epsilon(1e-14));
    CHECK(std::hypot(on_axis.e.x, on_axis.e.y) < 1e-16);
    CHECK(on_axis.b == Vec3{});
    // Equatorial plane: E = -(1/4 pi) p / r^3 z.
    const EMField eq = d.evaluate({{r, 0, 0}, 0.0});
    CHECK(eq.e.z == Approx(-1.0 / (4 * kPi * r * r * r)).epsilon(1e-14));
  }
}

TEST_CASE("dipole on the axis has B = 0, S = 0 and R = U") {
  const UnitSystem units(1.3);
  const FieldSource d = electric_dipole(gaussian_waveform(1.0, 0.6, 4.0, 0.0), units);
  for (double z : {-2.0, -0.4, 0.3, 1.1, 2.5}) {
    for (double t : {0.0, 0.5, 1.2, 2.0}) {
      const EMField f = d.evaluate({{0, 0, z}, t});
      CHECK(f.b == Vec3{});
      const DiagnosticSample s = diagnose(f, units);
      CHECK(norm(s.s) == 0.0);
      CHECK(s.r_density == Approx(s.u).epsilon(1e-15));
    }
  }
}

TEST_CASE("dipole radiation is outgoing in the far zone") {
  const UnitSystem units;
  const FieldSource d = electric_dipole(gaussian_waveform(1.0, 1.0, 3.0, 0.0), units);
  for (double r : {30.0, 60.0}) {
    const EMField f = d.evaluate({{r, 0, 0}, r + 0.2});
    CHECK(poynting(f).x > 0.0);
  }
}

TEST_CASE("dipole singularity at the origin") {
  const FieldSource d = electric_dipole(static_waveform(1.0), {});
  CHECK_THROWS_AS(d.evaluate({{0, 0, 0}, 0.0}), SingularityError);
}

TEST_CASE("property: dipole locality on the light-cone shell") {
  const double tau = 0.5, t0 = 1.0;
  const UnitSystem units;
  const FieldSource d = electric_dipole(gaussian_waveform(1.0, tau, 6.0, t0), units);
  for (double r : {2.0, 5.0, 12.0}) {
    const Vec3 pos{r * std::sin(1.0), 0, r * std::cos(1.0)};
    double peak = 0.0;
    for (int i = -400; i <= 400; ++i) {
      peak = std::max(peak, energy_density(d.evaluate({pos, t0 + r + i * 2 * tau / 400})));
    }
    for (double offset : {8.05, 9.0, 12.0}) {
      for (double sign : {-1.0, 1.0}) {
        const double u = energy_density(d.evaluate({pos, t0 + r + sign * offset * tau}));
        CHECK(u < 1e-12 * peak);
      }
    }
  }
}
