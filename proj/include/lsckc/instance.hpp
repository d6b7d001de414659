#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsckc/constraints.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

/// Known optimum of a generated instance. `provenance` is "exact" when
/// `value` is the true discrete optimum and "bounded" when it is only an
/// upper bound (then `lower_bound` carries the matching lower bound).
struct PlantedOptimum {
  double value = 0.0;
  std::string provenance = "exact";
  double r_plant = 0.0;
  std::optional<double> lower_bound;

  bool operator==(const PlantedOptimum&) const = default;
};

struct Instance {
  Dataset data;
  ConstraintSystem constraints;
  int k = 1;
  std::optional<PlantedOptimum> planted;
};

/// Normalizes the constraints; does not validate.
Instance make_instance(Dataset data, const RawConstraints& raw, int k);

std::vector<std::string> validate(const Instance& instance);
/// Throws ValidationError when `validate` reports anything.
void require_valid(const Instance& instance);

}  // namespace lsckc
