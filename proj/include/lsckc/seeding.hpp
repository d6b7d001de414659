#pragma once

#include <span>

#include "lsckc/constraints.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

/// Threshold seeding that honors ML sets.
///
/// Starts from `initial` and scans points once in id order. An ML-free point
/// becomes a center when it lies farther than `eta` from every center. A
/// member of ML set X becomes a center when no center reaches all of X
/// within `eta`, i.e. min_c max_{x in X} d(x, c) > eta. On return every
/// ML-free point is within `eta` of a center and every ML set is covered in
/// the max sense, provided eta is at least the largest ML-set radius.
CenterSet seed_centers(const Dataset& ds, std::span<const MLSet> ml, double eta,
                       std::span<const PointId> initial = {});

/// Largest CL set (first on ties); the standalone seeding start.
CLSet largest_cl_set(std::span<const CLSet> cl);

}  // namespace lsckc
