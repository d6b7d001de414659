#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lsckc/constraints.hpp"
#include "lsckc/instance.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

struct Violation {
  enum class Kind { cannot_link, must_link };
  Kind kind = Kind::cannot_link;
  std::size_t set = 0;  // index into the CL or ML list
  PointId a = 0;
  PointId b = 0;

  bool operator==(const Violation&) const = default;
};

/// Point-to-center map. `radius` is measured against the assigned centers,
/// which constraints can force to differ from the nearest ones.
struct Assignment {
  std::vector<PointId> center_of;
  double radius = 0.0;
  std::vector<Violation> violations;
};

inline constexpr std::size_t kDefaultSearchBudget = 2'000'000;

/// Finds a constraint-respecting assignment with every point within `eta`
/// of its center, or nullopt.
///
/// The first attempt replays the solver's feasibility witness: CL members
/// that are centers serve themselves, the rest follow the per-set maximum
/// matching, ML sets follow a pinned member or their best center, and free
/// points go to the nearest center. If that witness breaks a constraint
/// (possible with intersected CL sets or ML sets spanning CL sets) an exact
/// search over ML-contracted units takes over: bipartite matching for
/// components with one CL set, bounded backtracking otherwise.
/// `search_budget` caps backtracking nodes; 0 means unlimited.
std::optional<Assignment> find_assignment(std::span<const PointId> centers, const Instance& instance,
                                          double eta,
                                          std::size_t search_budget = kDefaultSearchBudget);

/// Requires coverage_feasible(centers, instance, eta); throws std::logic_error
/// otherwise. When no valid assignment exists the witness is returned with
/// its violations listed.
Assignment assign(std::span<const PointId> centers, const Instance& instance, double eta);

/// Assigns every point to its nearest center, ignoring constraints.
Assignment nearest_assignment(std::span<const PointId> centers, const Instance& instance);

double clustering_cost(const Assignment& a, const Dataset& ds);

/// Every CL pair sharing a center and every ML pair split across centers.
std::vector<Violation> verify(const Assignment& a, const ConstraintSystem& system);

/// max over points of d(p, centers).
double nearest_center_radius(std::span<const PointId> centers, const Dataset& ds);

}  // namespace lsckc
