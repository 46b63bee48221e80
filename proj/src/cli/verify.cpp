#include "reactive/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "reactive/analysis.hpp"
#include "reactive/diagnostics.hpp"
#include "reactive/nodes.hpp"
#include "reactive/relativity.hpp"
#include "reactive/scan.hpp"
#include "reactive/sources.hpp"

namespace reactive {
namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Vec3 random_vec(double bound) {
    return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
  }

  EMField random_field(double bound) { return {random_vec(bound), random_vec(bound)}; }

  Boost random_boost(double max_speed) {
    Vec3 dir;
    do {
      dir = random_vec(1.0);
    } while (norm2(dir) < 1e-6 || norm2(dir) > 1.0);
    return Boost(uniform(0.0, max_speed) / norm(dir) * dir);
  }

  void check(std::string name, const std::function<std::string()>& body) {
    PropertyResult result{std::move(name), false, {}};
    try {
      result.detail = body();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::mt19937_64 rng_;
  std::vector<PropertyResult> results_;
};

template <typename T>
std::string fail(const std::string& what, T value) {
  std::ostringstream os;
  os.precision(6);
  os << what << " = " << value;
  return os.str();
}

// Distance from x to the nearest multiple of step.
double lattice_distance(double x, double step) {
  const double q = x / step;
  return std::abs(q - std::round(q)) * step;
}

// Nodes found for `profile` on [lo, hi] must match `expected` one-to-one within tol.
std::string match_nodes(const NodeSet& found, std::vector<double> expected, double tol) {
  std::sort(expected.begin(), expected.end());
  if (found.nodes.size() != expected.size()) {
    std::ostringstream os;
    os << "found " << found.nodes.size() << " nodes, expected " << expected.size();
    return os.str();
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(found.nodes[i].position - expected[i]) > tol) {
      return fail("node position error", std::abs(found.nodes[i].position - expected[i]));
    }
  }
  return {};
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
  Suite suite(seed);
  const UnitSystem unit_c;

  suite.check("standing-wave closed form (U, S, R on 201x201 grid)", [&]() -> std::string {
    const FieldSource wave = standing_plane_wave(1.0, 1.0, unit_c);
    GridRegion line;
    line.z = {0.0, 2.0 * kPi, 201};
    const GridScan grid = scan(wave, line, Range{0.0, 2.0 * kPi, 201}, unit_c);
    double worst = 0.0;
    for (const ScanRecord& rec : grid.records) {
      const double ca = std::cos(rec.point.r.z - rec.point.t);
      const double cb = std::cos(rec.point.r.z + rec.point.t);
      worst = std::max({worst, std::abs(rec.diagnostics.u - (ca * ca + cb * cb)),
                        std::abs(rec.diagnostics.s.z - (ca * ca - cb * cb)),
                        std::abs(rec.diagnostics.r_density - 2.0 * std::abs(ca * cb))});
    }
    return worst <= 1e-12 ? "" : fail("max error", worst);
  });

  suite.check("traveling nodal planes of R", [&]() -> std::string {
    for (int trial = 0; trial < 20;) {
      const double k = suite.uniform(0.5, 3.0);
      const double t = suite.uniform(0.0, 2.0 * kPi / k);
      const double lambda = 2.0 * kPi / k;
      const double lo = 0.0;
      const double hi = 2.0 * lambda;
      std::vector<double> expected;
      for (int l = -12; l <= 12; ++l) {
        for (double sign : {-1.0, 1.0}) {
          const double z = (2.0 * l + 1.0) * kPi / (2.0 * k) + sign * t;
          if (z >= lo && z <= hi) expected.push_back(z);
        }
      }
      std::sort(expected.begin(), expected.end());
      // Skip configurations whose nodes sit on the window edge, or pairs
      // closer than four grid spacings (near t = t_n they coalesce into a
      // double root that the finder merges by design).
      const double resolution = 4.0 * (hi - lo) / 511.0;
      bool ambiguous = false;
      for (std::size_t i = 0; i < expected.size(); ++i) {
        ambiguous = ambiguous || expected[i] - lo < 1e-3 * lambda || hi - expected[i] < 1e-3 * lambda;
        if (i > 0) ambiguous = ambiguous || expected[i] - expected[i - 1] < resolution;
      }
      for (int l = -12; l <= 12 && !ambiguous; ++l) {
        for (double sign : {-1.0, 1.0}) {
          const double z = (2.0 * l + 1.0) * kPi / (2.0 * k) + sign * t;
          ambiguous = ambiguous || (z < lo && lo - z < 1e-3 * lambda) || (z > hi && z - hi < 1e-3 * lambda);
        }
      }
      if (ambiguous) continue;
      ++trial;
      const FieldSource wave = standing_plane_wave(1.0, k, unit_c);
      const NodeSet nodes = find_nodes(
          [&](double z) { return reactive_density_direct(wave.evaluate({{0, 0, z}, t})); }, lo, hi,
          {1e-6, 512, 1e-9});
      if (auto err = match_nodes(nodes, expected, 1e-6 * lambda); !err.empty()) {
        return err + fail(" at k", k) + fail(", t", t);
      }
    }
    return {};
  });

  suite.check("fixed velocity nodes and total reflection", [&]() -> std::string {
    const double k = 1.3;
    const FieldSource wave = standing_plane_wave(1.0, k, unit_c);
    const double lambda = 2.0 * kPi / k;
    const double period = 2.0 * kPi / k;
    auto vz = [&](double z, double t) { return flow_velocity(wave.evaluate({{0, 0, z}, t}), unit_c).v.z; };
    const double t_fixed = 0.37 * period / 4.0 + 0.1;
    const double z_fixed = 0.29 * lambda / 4.0 + 0.05;
    std::vector<double> z_nodes;
    std::vector<double> t_nodes;
    for (int n = 0; n <= 4; ++n) {
      z_nodes.push_back(n * kPi / (2.0 * k));
      t_nodes.push_back(n * kPi / (2.0 * k));
    }
    const NodeSet zn = find_nodes([&](double z) { return std::abs(vz(z, t_fixed)); }, 0.0, lambda, {1e-6});
    if (auto err = match_nodes(zn, z_nodes, 1e-6); !err.empty()) return "space: " + err;
    const NodeSet tn = find_nodes([&](double t) { return std::abs(vz(z_fixed, t)); }, 0.0, period, {1e-6});
    if (auto err = match_nodes(tn, t_nodes, 1e-6); !err.empty()) return "time: " + err;
    const double eps = 1e-4 / k;
    for (std::size_t i = 1; i + 1 < z_nodes.size(); ++i) {
      if (vz(z_nodes[i] - eps, t_fixed) * vz(z_nodes[i] + eps, t_fixed) >= 0.0) return "no sign change in z";
      if (vz(z_fixed, t_nodes[i] - eps) * vz(z_fixed, t_nodes[i] + eps) >= 0.0) return "no sign change in t";
    }
    return {};
  });

  suite.check("undefined-velocity lattice (n + m odd)", [&]() -> std::string {
    const StandingWaveParams params{1.0, 1.0, 1.0};
    const SpaceTimeWindow window{0.0, 4.0 * kPi, 0.0, 4.0 * kPi};
    const auto events = undefined_velocity_events(params, window);
    if (events.size() != 40) return fail("event count", events.size());
    for (const auto& ev : events) {
      if ((ev.n + ev.m) % 2 == 0) return "even-parity event listed";
    }
    return {};
  });

  suite.check("dual-formula identity for R (1e5 samples)", [&]() -> std::string {
    for (int i = 0; i < 100000; ++i) {
      const EMField f = suite.random_field(10.0);
      const double u = energy_density(f);
      const double diff = std::abs(reactive_density_direct(f) - reactive_density_invariant(f));
      if (diff > 1e-10 * (1.0 + u)) return fail("formula mismatch", diff);
      if (reactive_radicand(f) < -1e-12 * u * u) return fail("negative radicand", reactive_radicand(f));
    }
    return {};
  });

  suite.check("speed bound and scaling covariance", [&]() -> std::string {
    for (int i = 0; i < 10000; ++i) {
      const EMField f = suite.random_field(10.0);
      const double c = suite.uniform(0.5, 3.0);
      const UnitSystem units(c);
      const DiagnosticSample d = diagnose(f, units);
      if (d.v_defined && norm(d.v) > c * (1.0 + 1e-12)) return fail("superluminal |v|/c", norm(d.v) / c);
      const double lambda = suite.uniform(0.1, 10.0);
      const DiagnosticSample ds = diagnose(lambda * f, units);
      const double l2 = lambda * lambda;
      if (std::abs(ds.u - l2 * d.u) > 1e-12 * l2 * d.u ||
          std::abs(ds.r_density - l2 * d.r_density) > 1e-12 * l2 * d.u ||
          norm(ds.v - d.v) > 1e-12 * c) {
        return "scaling covariance violated";
      }
    }
    return {};
  });

  suite.check("null traveling plane waves (1e4 samples each)", [&]() -> std::string {
    for (Propagation dir : {Propagation::kForward, Propagation::kBackward}) {
      for (int i = 0; i < 10000; ++i) {
        const double angle = suite.uniform(0.0, 2.0 * kPi);
        const PlaneWaveSpec spec{suite.uniform(-5.0, 5.0), suite.uniform(0.1, 5.0), dir,
                                 {std::cos(angle), std::sin(angle), 0.0}};
        const FieldSource wave = traveling_plane_wave(spec, unit_c);
        const EMField f = wave.evaluate({suite.random_vec(10.0), suite.uniform(-10.0, 10.0)});
        const DiagnosticSample d = diagnose(f, unit_c);
        if (d.r_density > 1e-14 * d.u) return fail("R/U", d.r_density / d.u);
        if (d.v_defined && std::abs(norm(d.v) - 1.0) > 1e-12) return fail("|v| - c", norm(d.v) - 1.0);
      }
    }
    return {};
  });

  suite.check("Lorentz invariance of R and the field invariants", [&]() -> std::string {
    for (int i = 0; i < 10000; ++i) {
      const EMField f = suite.random_field(10.0);
      const Boost b = suite.random_boost(0.9);
      const EMField g = boost_field(f, b);
      const double r0 = reactive_density_invariant(f);
      const double r1 = reactive_density_invariant(g);
      if (std::abs(r1 - r0) > 1e-9 * r0) return fail("relative change of R", std::abs(r1 - r0) / r0);
      const InvariantPair a = invariants(f);
      const InvariantPair c = invariants(g);
      const double scale = energy_density(f);
      if (std::abs(a.i1 - c.i1) > 1e-10 * scale || std::abs(a.i2 - c.i2) > 1e-10 * scale) {
        return "field invariants not preserved";
      }
      if (std::abs(b.gamma() * b.gamma() * (1.0 - norm2(b.beta())) - 1.0) > 1e-14) return "gamma identity";
    }
    const EMField f{{1.0, 0.0, 0.0}, {0.0, 0.5, 0.0}};
    const double u_boosted = energy_density(boost_field(f, Boost({0.0, 0.0, 0.5})));
    if (std::abs(u_boosted - energy_density(f)) < 1e-3) return "U unexpectedly invariant";
    return {};
  });

  suite.check("Poynting residual converges at second order", [&]() -> std::string {
    const ResidualSteps steps = default_residual_steps(1.0, unit_c);
    const FieldSource wave = standing_plane_wave(1.0, 1.0, unit_c);
    const ResidualReport sw = poynting_residual(wave, {{0.0, 0.0, 0.37}, 0.81}, steps.h_t, steps.h_x, unit_c);
    if (std::abs(sw.residual) > 1e-4) return fail("standing-wave residual", sw.residual);
    if (!(sw.ratio >= 3.5 && sw.ratio <= 4.5)) return fail("standing-wave ratio", sw.ratio);
    const double tau = 2.0;
    const FieldSource dipole = electric_dipole(gaussian_waveform(1.0, tau, 1.0, 0.0), unit_c);
    const double r = 3.0 * tau;
    const Vec3 pos = r * Vec3{std::sin(1.0), 0.0, std::cos(1.0)};
    const ResidualReport dp = poynting_residual(dipole, {pos, r + 0.3 * tau}, steps.h_t, steps.h_x, unit_c);
    if (std::abs(dp.residual) > 1e-4) return fail("dipole residual", dp.residual);
    if (!(dp.ratio >= 3.5 && dp.ratio <= 4.5)) return fail("dipole ratio", dp.ratio);
    return {};
  });

  suite.check("reactive energy of the standing wave is pure interference", [&]() -> std::string {
    const FieldSource fwd = traveling_plane_wave({1.0, 1.0, Propagation::kForward, kUnitX}, unit_c);
    const FieldSource bwd = traveling_plane_wave({1.0, 1.0, Propagation::kBackward, kUnitX}, unit_c);
    for (int i = 0; i < 1000; ++i) {
      const SpaceTimePoint p{suite.random_vec(10.0), suite.uniform(-10.0, 10.0)};
      const EMField f1 = fwd.evaluate(p);
      const EMField f2 = bwd.evaluate(p);
      const InvariantPair whole = invariants(f1 + f2);
      const InvariantPair cross = cross_invariants(f1, f2);
      if (std::abs(whole.i1 - cross.i1) > 1e-12 || std::abs(whole.i2 - cross.i2) > 1e-12) {
        return "cross terms do not account for the sum";
      }
      const EMField g1 = suite.random_field(5.0);
      const EMField g2 = suite.random_field(5.0);
      const InvariantPair sum = invariants(g1 + g2);
      const InvariantPair a = invariants(g1);
      const InvariantPair b = invariants(g2);
      const InvariantPair x = cross_invariants(g1, g2);
      if (std::abs(sum.i1 - (a.i1 + b.i1 + x.i1)) > 1e-12 * 300 ||
          std::abs(sum.i2 - (a.i2 + b.i2 + x.i2)) > 1e-12 * 300) {
        return "bilinear decomposition violated";
      }
    }
    return {};
  });

  suite.check("far-zone decay: R/U -> 0 along the dipole equator", [&]() -> std::string {
    const double omega0 = 1.0;
    const FieldSource dipole = electric_dipole(gaussian_waveform(1.0, 6.0 / omega0, omega0, 0.0), unit_c);
    const std::vector<double> radii{20.0, 40.0, 80.0, 160.0};
    const DecayResult d = decay_exponent(dipole, kUnitX, radii, {0.0, true}, unit_c);
    if (!(d.slope_u >= -2.2 && d.slope_u <= -1.8)) return fail("slope_U", d.slope_u);
    if (!d.slope_r || !(*d.slope_r <= d.slope_u - 0.5)) return fail("slope_R", d.slope_r.value_or(NAN));
    for (std::size_t i = 1; i < radii.size(); ++i) {
      if (!(d.r_density[i] / d.u[i] < d.r_density[i - 1] / d.u[i - 1])) return "R/U not decreasing";
    }
    return {};
  });

  suite.check("time-averaged flow velocity vs instantaneous velocity", [&]() -> std::string {
    const FieldSource wave = standing_plane_wave(1.0, 1.0, unit_c);
    const double period = 2.0 * kPi;
    for (int i = 0; i < 20;) {
      const double z = suite.uniform(0.0, 2.0 * kPi);
      if (lattice_distance(z, kPi / 2.0) < 0.02 * 2.0 * kPi) continue;
      ++i;
      const AveragedFlow avg = time_averaged_flow_velocity(wave, {0, 0, z}, 1.0, unit_c);
      if (!avg.defined || norm(avg.v) > 1e-10) return fail("|v_omega|", norm(avg.v));
      auto neg_speed = [&](double t) { return -norm(flow_velocity(wave.evaluate({{0, 0, z}, t}), unit_c).v); };
      const int samples = 10000;
      double best_t = 0.0;
      double best = 0.0;
      for (int j = 0; j < samples; ++j) {
        const double t = period * j / samples;
        if (neg_speed(t) < best) {
          best = neg_speed(t);
          best_t = t;
        }
      }
      const double h = period / samples;
      best = std::min(best, golden_section_minimize(neg_speed, best_t - h, best_t + h, 1e-12).value);
      if (-best < 0.999) return fail("max |v|/c", -best);
    }
    return {};
  });

  suite.check("evaluation purity and superposition linearity", [&]() -> std::string {
    const FieldSource a = standing_plane_wave(1.3, 0.7, unit_c);
    const FieldSource b = electric_dipole(gaussian_waveform(1.0, 1.0, 2.0, 0.0), unit_c);
    const FieldSource sum = superpose({a, b});
    for (int i = 0; i < 1000; ++i) {
      Vec3 r = suite.random_vec(5.0);
      if (norm(r) < 0.1) r = r + Vec3{1.0, 0.0, 0.0};
      const SpaceTimePoint p{r, suite.uniform(-5.0, 5.0)};
      if (!(sum.evaluate(p) == sum.evaluate(p))) return "evaluation not deterministic";
      if (!(sum.evaluate(p) == a.evaluate(p) + b.evaluate(p))) return "superposition not exact";
    }
    return {};
  });

  return suite.take();
}

}  // namespace reactive
