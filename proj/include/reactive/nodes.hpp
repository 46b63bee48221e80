#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace reactive {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of f on [lo, hi], stopping once the
/// bracket is no wider than `width`. Returns the best point evaluated.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                      double width);

struct NodeSearchOptions {
  double abs_tol = 1e-8;           // accept a refined minimum only if its value is <= abs_tol
  std::size_t initial_grid = 512;  // uniform bracketing grid, >= 8
  double refine_ratio = 1e-9;      // refined bracket width as a fraction of the interval
};

struct Node {
  double position = 0.0;
  double value = 0.0;
};

/// Zeros of a nonnegative profile, strictly increasing in position.
struct NodeSet {
  std::vector<Node> nodes;
  double abs_tol = 0.0;
  double refine_width = 0.0;
};

/// Finds where a nonnegative profile touches zero on [lo, hi]. Zeros of such
/// profiles are usually tangential, so nodes are detected as refined local
/// minima whose value is below abs_tol rather than by sign change. Minima
/// closer than two grid spacings are merged into the lower one.
NodeSet find_nodes(const std::function<double(double)>& profile, double lo, double hi,
                   const NodeSearchOptions& options = {});

struct StandingWaveParams {
  double amplitude = 1.0;
  double omega = 1.0;
  double c = 1.0;

  double k() const { return omega / c; }
};

struct SpaceTimeWindow {
  double z_min = 0.0;
  double z_max = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
};

/// Lattice event z = n pi / 2k, t = m pi / 2 omega.
struct LatticeEvent {
  long n = 0;
  long m = 0;
  double z = 0.0;
  double t = 0.0;
};

/// Events where both U and S of the standing wave vanish, so the flow
/// velocity is undefined: the lattice points with n + m odd inside the
/// window. Each returned event is checked to have U <= 1e-12 A^2 and each
/// even-parity lattice point in the window to have U > 0.1 A^2; a failed
/// check throws ConsistencyError.
std::vector<LatticeEvent> undefined_velocity_events(const StandingWaveParams& params,
                                                    const SpaceTimeWindow& window);

/// All lattice points of the window regardless of parity.
std::vector<LatticeEvent> standing_wave_lattice(const StandingWaveParams& params,
                                                const SpaceTimeWindow& window);

}  // namespace reactive
