#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "reactive/diagnostics.hpp"
#include "reactive/field.hpp"

namespace reactive {

/// Inclusive, evenly spaced samples start..stop. A single-sample range is a
/// fixed coordinate and requires start == stop.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  static Range fixed(double value) { return {value, value, 1}; }

  void validate(const std::string& what) const;
  double at(std::size_t i) const;
};

/// Straight probe origin + s * direction, s in [0, length].
struct ScanLine {
  Vec3 origin;
  Vec3 direction = kUnitZ;
  double length = 1.0;
  std::size_t samples = 2;

  void validate() const;
  Vec3 at(std::size_t i) const;
};

/// Axis-aligned box (or slab, line, point) sampled on a tensor grid.
struct GridRegion {
  Range x = Range::fixed(0.0);
  Range y = Range::fixed(0.0);
  Range z = Range::fixed(0.0);

  void validate() const;
  std::size_t size() const { return x.count * y.count * z.count; }
};

using ScanGeometry = std::variant<ScanLine, GridRegion>;

struct ScanLimits {
  std::size_t max_samples = 20'000'000;
};

struct ScanRecord {
  SpaceTimePoint point;
  EMField field;
  DiagnosticSample diagnostics;
};

/// Records are ordered with time outermost, then x, y, z (or the line index).
struct GridScan {
  ScanGeometry geometry;
  Range time;
  std::size_t declared_count = 0;
  std::vector<ScanRecord> records;
};

std::size_t scan_sample_count(const ScanGeometry& geometry, const Range& time);

/// Evaluates the source and all diagnostics at every sample. Throws
/// ResourceError over budget and SingularityError (naming the sample) if the
/// source diverges inside the geometry.
GridScan scan(const FieldSource& source, const ScanGeometry& geometry, const Range& time,
              const UnitSystem& units, const ScanLimits& limits = {});

}  // namespace reactive
