#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsckc/assignment.hpp"
#include "lsckc/driver.hpp"
#include "lsckc/instance.hpp"

namespace lsckc {

inline constexpr std::size_t kExactSizeLimit = 14;

struct ExactResult {
  bool feasible = false;
  double radius = 0.0;
  CenterSet centers;
  Assignment assignment;
  std::vector<std::string> errors;
};

/// Exhaustive optimum for tiny instances (n <= kExactSizeLimit, else
/// InputError). Feasibility at radius r is "some k-subset of points admits a
/// constraint-respecting assignment within r", decided exactly; the smallest
/// such r in search_radii() is returned with the first such subset in
/// lexicographic order.
ExactResult exact_opt(const Instance& instance);

/// Farthest-first traversal from point 0, ignoring constraints; ties go to
/// the lower id.
CenterSet gonzalez(const Dataset& ds, int k);

/// In-house constrained heuristic used as a comparison baseline. Not a
/// reimplementation of any published method.
///
/// Starts from gonzalez centers; while some CL set cannot be matched within
/// the current ML-aware nearest-center radius, its farthest unmatched member
/// is promoted to a center, evicting (when over budget) the center whose
/// removal raises that radius least. Constrained centers are evicted only
/// when nothing else is left. The final assignment uses the smallest radius
/// at which the centers admit one.
Solution greedy_constrained(const Instance& instance);

/// Gonzalez centers with a nearest-center assignment (constraints ignored,
/// so violations may be reported).
Solution gonzalez_solution(const Instance& instance);

}  // namespace lsckc
