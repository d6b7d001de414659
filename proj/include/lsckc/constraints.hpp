#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lsckc/metric.hpp"

namespace lsckc {

/// Points that must land in pairwise distinct clusters.
using CLSet = std::vector<PointId>;
/// Points that must share one cluster.
using MLSet = std::vector<PointId>;

/// Constraint sets as read from input: may overlap, repeat ids, or be vacuous.
struct RawConstraints {
  std::vector<std::vector<PointId>> cl;
  std::vector<std::vector<PointId>> ml;
};

/// Normalized constraints. ML sets are pairwise disjoint and CL sets have at
/// least two members; member order follows first appearance in the input.
///
/// `disjoint_cl` is evaluated after contracting every ML set to a single
/// unit: it is false when a point sits in two CL sets, and also when one ML
/// set touches two different CL sets (its members must then share a center
/// that both CL sets exclude for their other members).
struct ConstraintSystem {
  std::vector<CLSet> cl;
  std::vector<MLSet> ml;
  std::unordered_map<PointId, std::size_t> ml_of;
  std::unordered_map<PointId, std::vector<std::size_t>> cl_of;
  bool disjoint_cl = true;

  std::optional<std::size_t> ml_set_of(PointId p) const;
  /// CL set indices that contain `p`; empty for CL-free points.
  const std::vector<std::size_t>& cl_sets_of(PointId p) const;
  bool in_cl(PointId p) const { return cl_of.contains(p); }
  bool in_ml(PointId p) const { return ml_of.contains(p); }
  bool empty() const { return cl.empty() && ml.empty(); }

  /// Union of all CL sets, ascending.
  std::vector<PointId> cl_points() const;
  RawConstraints raw() const { return RawConstraints{cl, ml}; }

  bool operator==(const ConstraintSystem&) const = default;
};

/// Merges intersecting ML sets, strips duplicate ids, drops vacuous CL sets.
/// Throws InfeasibleError when a CL set holds two members of one ML set.
ConstraintSystem normalize(const RawConstraints& raw);

/// Collects every violation of |Y| <= k, id < n and k >= 1.
std::vector<std::string> validate(const ConstraintSystem& system, int k, std::size_t n);

/// max over the ML set of `p` of d(x, c); plain d(p, c) for ML-free points.
double effective_distance(PointId p, PointId c, const ConstraintSystem& system, const Dataset& ds);

/// min over centers of the ML-set max distance.
double ml_set_distance(const MLSet& set, std::span<const PointId> centers, const Dataset& ds);

}  // namespace lsckc
