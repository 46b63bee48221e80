#include "reactive/field.hpp"

#include <cmath>

#include "reactive/errors.hpp"

namespace reactive {

UnitSystem::UnitSystem(double c) : c_(c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw InvalidArgument("speed of light c must be a positive finite number");
  }
}

FieldSource::FieldSource(Evaluator evaluator, std::string name, bool source_free)
    : evaluator_(std::move(evaluator)), name_(std::move(name)), source_free_(source_free) {
  if (!evaluator_) {
    throw InvalidArgument("field source needs an evaluator");
  }
}

FieldSource zero_source() {
  return FieldSource([](const SpaceTimePoint&) { return EMField{}; }, "zero", true);
}

FieldSource superpose(std::span<const FieldSource> sources) {
  if (sources.empty()) {
    throw InvalidArgument("superpose requires at least one source");
  }
  std::vector<FieldSource> parts(sources.begin(), sources.end());
  std::string name = "superpose(";
  bool source_free = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    name += (i ? "," : "") + parts[i].name();
    source_free = source_free && parts[i].source_free();
  }
  name += ")";
  // Summation order is fixed (left to right) so results are bit-reproducible.
  auto evaluator = [parts = std::move(parts)](const SpaceTimePoint& p) {
    EMField sum = parts.front().evaluate(p);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      sum = sum + parts[i].evaluate(p);
    }
    return sum;
  };
  return FieldSource(std::move(evaluator), std::move(name), source_free);
}

FieldSource superpose(std::initializer_list<FieldSource> sources) {
  return superpose(std::span<const FieldSource>(sources.begin(), sources.size()));
}

FieldSource negated(FieldSource source) {
  std::string name = "-" + source.name();
  const bool source_free = source.source_free();
  return FieldSource([s = std::move(source)](const SpaceTimePoint& p) { return -s.evaluate(p); },
                     std::move(name), source_free);
}

}  // namespace reactive
