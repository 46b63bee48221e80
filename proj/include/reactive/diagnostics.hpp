#pragma once

#include "reactive/field.hpp"
#include "reactive/vec3.hpp"

namespace reactive {

/// Energy density below which the flow velocity is reported undefined.
inline constexpr double kVelocityEnergyFloor = 1e-300;

/// Radicand U^2 - |S|^2 is clamped to zero above -kRadicandClampRel * U^2;
/// anything more negative is reported as a ConsistencyError.
inline constexpr double kRadicandClampRel = 1e-12;

/// Pointwise diagnostics derived from one field sample.
struct DiagnosticSample {
  double u = 0.0;          // energy density
  Vec3 s;                  // Poynting vector E x B
  double r_density = 0.0;  // reactive energy density sqrt(U^2 - S^2)
  double inertia = 0.0;    // r_density / c^2
  Vec3 v;                  // energy flow velocity c S / U
  bool v_defined = false;
};

/// The two Lorentz scalars of the field: E^2 - B^2 and E.B.
struct InvariantPair {
  double i1 = 0.0;
  double i2 = 0.0;

  friend constexpr bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

struct FlowVelocity {
  Vec3 v;
  bool defined = false;
};

double energy_density(const EMField& f);
Vec3 poynting(const EMField& f);

/// U^2 - |S|^2 evaluated in double-double arithmetic, rounded once to double.
/// Exposed so callers can inspect the unclamped value.
double reactive_radicand(const EMField& f);

/// sqrt(U^2 - |S|^2). The canonical reactive energy density.
double reactive_density_direct(const EMField& f);

/// sqrt((E^2 - B^2)^2 / 4 + (E.B)^2), the same quantity through the invariants.
double reactive_density_invariant(const EMField& f);

InvariantPair invariants(const EMField& f);

/// True when both invariants vanish relative to E^2 + B^2 (zero field included).
bool is_null(const EMField& f, double tol);

double inertia_density(const EMField& f, const UnitSystem& units);

FlowVelocity flow_velocity(const EMField& f, const UnitSystem& units);

DiagnosticSample diagnose(const EMField& f, const UnitSystem& units);

}  // namespace reactive
