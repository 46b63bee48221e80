#include "reactive/scan.hpp"

#include <cmath>
#include <sstream>

#include "reactive/errors.hpp"

namespace reactive {

void Range::validate(const std::string& what) const {
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw InvalidArgument(what + ": range endpoints must be finite");
  }
  if (count == 0) {
    throw InvalidArgument(what + ": range needs at least one sample");
  }
  if (count == 1 && start != stop) {
    throw InvalidArgument(what + ": a range over an interval needs at least 2 samples");
  }
  if (count >= 2 && !(stop > start)) {
    throw InvalidArgument(what + ": range stop must exceed start");
  }
}

double Range::at(std::size_t i) const {
  if (count == 1) {
    return start;
  }
  if (i + 1 == count) {
    return stop;
  }
  const double frac = static_cast<double>(i) / static_cast<double>(count - 1);
  return start + frac * (stop - start);
}

void ScanLine::validate() const {
  if (samples < 2) {
    throw InvalidArgument("scan line needs at least 2 samples");
  }
  if (!(std::isfinite(length) && length > 0.0)) {
    throw InvalidArgument("scan line length must be positive");
  }
  if (!is_finite(origin) || !is_finite(direction) || std::abs(norm(direction) - 1.0) > 1e-14) {
    throw InvalidArgument("scan line direction must be a unit vector");
  }
}

Vec3 ScanLine::at(std::size_t i) const {
  const double s = length * static_cast<double>(i) / static_cast<double>(samples - 1);
  return origin + s * direction;
}

void GridRegion::validate() const {
  x.validate("x");
  y.validate("y");
  z.validate("z");
}

std::size_t scan_sample_count(const ScanGeometry& geometry, const Range& time) {
  const std::size_t spatial =
      std::holds_alternative<ScanLine>(geometry) ? std::get<ScanLine>(geometry).samples
                                                 : std::get<GridRegion>(geometry).size();
  return spatial * time.count;
}

GridScan scan(const FieldSource& source, const ScanGeometry& geometry, const Range& time,
              const UnitSystem& units, const ScanLimits& limits) {
  std::visit([](const auto& g) { g.validate(); }, geometry);
  time.validate("t");

  const std::size_t total = scan_sample_count(geometry, time);
  if (total > limits.max_samples) {
    std::ostringstream msg;
    msg << "scan of " << total << " samples exceeds the budget of " << limits.max_samples;
    throw ResourceError(msg.str());
  }

  std::vector<Vec3> positions;
  if (const auto* line = std::get_if<ScanLine>(&geometry)) {
    positions.reserve(line->samples);
    for (std::size_t i = 0; i < line->samples; ++i) {
      positions.push_back(line->at(i));
    }
  } else {
    const auto& box = std::get<GridRegion>(geometry);
    positions.reserve(box.size());
    for (std::size_t ix = 0; ix < box.x.count; ++ix) {
      for (std::size_t iy = 0; iy < box.y.count; ++iy) {
        for (std::size_t iz = 0; iz < box.z.count; ++iz) {
          positions.push_back({box.x.at(ix), box.y.at(iy), box.z.at(iz)});
        }
      }
    }
  }

  GridScan out{geometry, time, total, {}};
  out.records.reserve(total);
  for (std::size_t it = 0; it < time.count; ++it) {
    const double t = time.at(it);
    for (const Vec3& r : positions) {
      const SpaceTimePoint p{r, t};
      EMField f;
      try {
        f = source.evaluate(p);
      } catch (const SingularityError& e) {
        std::ostringstream msg;
        msg << e.what() << " (sample " << out.records.size() << " at r=" << r << ", t=" << t
            << ")";
        throw SingularityError(msg.str());
      }
      out.records.push_back({p, f, diagnose(f, units)});
    }
  }
  return out;
}

}  // namespace reactive
