#include "reactive/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "reactive/diagnostics.hpp"
#include "reactive/errors.hpp"
#include "reactive/sources.hpp"

namespace reactive {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double width) {
  if (!(hi >= lo)) {
    throw InvalidArgument("golden section bracket must satisfy lo <= hi");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  ScalarMinimum best{lo, f(lo)};
  auto consider = [&best](double x, double fx) {
    if (fx < best.value) {
      best = {x, fx};
    }
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  consider(x1, f1);
  consider(x2, f2);

  // The bracket shrinks by 1/phi per step; 200 steps is far past double resolution.
  for (int iter = 0; iter < 200 && (b - a) > width; ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
      consider(x2, f2);
    }
  }
  return best;
}

NodeSet find_nodes(const std::function<double(double)>& profile, double lo, double hi,
                   const NodeSearchOptions& options) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && hi > lo)) {
    throw InvalidArgument("node search interval must be finite with hi > lo");
  }
  if (options.initial_grid < 8) {
    throw InvalidArgument("node search initial grid must have at least 8 points");
  }
  if (!(options.abs_tol > 0.0)) {
    throw InvalidArgument("node search tolerance must be positive");
  }
  if (!(options.refine_ratio > 0.0 && options.refine_ratio < 1.0)) {
    throw InvalidArgument("node search refine ratio must lie in (0, 1)");
  }

  const std::size_t n = options.initial_grid;
  const double spacing = (hi - lo) / static_cast<double>(n - 1);
  const double width = (hi - lo) * options.refine_ratio;
  auto grid_x = [&](std::size_t i) { return i + 1 == n ? hi : lo + static_cast<double>(i) * spacing; };

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = profile(grid_x(i));
  }

  std::vector<Node> accepted;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i + 1 == n || values[i] <= values[i + 1];
    if (!left_ok || !right_ok) {
      continue;
    }
    const double a = grid_x(i == 0 ? 0 : i - 1);
    const double b = grid_x(i + 1 == n ? i : i + 1);
    ScalarMinimum m = golden_section_minimize(profile, a, b, width);
    if (values[i] < m.value) {
      m = {grid_x(i), values[i]};
    }
    if (m.value <= options.abs_tol) {
      accepted.push_back({m.x, m.value});
    }
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Node& l, const Node& r) { return l.position < r.position; });

  NodeSet out{{}, options.abs_tol, width};
  for (const Node& node : accepted) {
    if (!out.nodes.empty() && node.position - out.nodes.back().position < 2.0 * spacing) {
      if (node.value < out.nodes.back().value) {
        out.nodes.back() = node;
      }
      continue;
    }
    out.nodes.push_back(node);
  }
  return out;
}

namespace {

void validate(const StandingWaveParams& params, const SpaceTimeWindow& window) {
  if (!(std::isfinite(params.omega) && params.omega > 0.0)) {
    throw InvalidArgument("standing wave omega must be positive");
  }
  if (!(std::isfinite(params.c) && params.c > 0.0)) {
    throw InvalidArgument("speed of light c must be positive");
  }
  if (!std::isfinite(params.amplitude) || params.amplitude == 0.0) {
    throw InvalidArgument("standing wave amplitude must be finite and nonzero");
  }
  if (!(window.z_max >= window.z_min && window.t_max >= window.t_min) ||
      !std::isfinite(window.z_min) || !std::isfinite(window.z_max) ||
      !std::isfinite(window.t_min) || !std::isfinite(window.t_max)) {
    throw InvalidArgument("space-time window must be finite and ordered");
  }
}

// Integer lattice indices whose coordinates index * step fall in [lo, hi].
// A relative slack of 1e-9 keeps endpoints such as z = pi from being lost to
// rounding in the division.
std::pair<long, long> index_span(double lo, double hi, double step) {
  constexpr double kSlack = 1e-9;
  return {static_cast<long>(std::ceil(lo / step - kSlack)),
          static_cast<long>(std::floor(hi / step + kSlack))};
}

}  // namespace

std::vector<LatticeEvent> standing_wave_lattice(const StandingWaveParams& params,
                                                const SpaceTimeWindow& window) {
  validate(params, window);
  const double z_step = std::numbers::pi / (2.0 * params.k());
  const double t_step = std::numbers::pi / (2.0 * params.omega);
  const auto [n_lo, n_hi] = index_span(window.z_min, window.z_max, z_step);
  const auto [m_lo, m_hi] = index_span(window.t_min, window.t_max, t_step);

  std::vector<LatticeEvent> out;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (long m = m_lo; m <= m_hi; ++m) {
      out.push_back({n, m, static_cast<double>(n) * z_step, static_cast<double>(m) * t_step});
    }
  }
  return out;
}

std::vector<LatticeEvent> undefined_velocity_events(const StandingWaveParams& params,
                                                    const SpaceTimeWindow& window) {
  const std::vector<LatticeEvent> lattice = standing_wave_lattice(params, window);
  const FieldSource wave = standing_plane_wave(params.amplitude, params.omega, UnitSystem(params.c));
  const double a2 = params.amplitude * params.amplitude;

  std::vector<LatticeEvent> out;
  for (const LatticeEvent& ev : lattice) {
    const double u = energy_density(wave.evaluate({{0.0, 0.0, ev.z}, ev.t}));
    const bool odd = ((ev.n + ev.m) % 2) != 0;
    if (odd && u > 1e-12 * a2) {
      std::ostringstream msg;
      msg << "lattice event n=" << ev.n << ", m=" << ev.m << " should have U = 0 but U = " << u;
      throw ConsistencyError(msg.str());
    }
    if (!odd && !(u > 0.1 * a2)) {
      std::ostringstream msg;
      msg << "lattice event n=" << ev.n << ", m=" << ev.m << " should have U > 0 but U = " << u;
      throw ConsistencyError(msg.str());
    }
    if (odd) {
      out.push_back(ev);
    }
  }
  return out;
}

}  // namespace reactive
