#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lsckc/constraints.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

/// CL members still to be served (left) against available centers (right).
/// Edge (y, c) exists iff effective_distance(y, c) <= eta.
struct ThresholdBipartiteGraph {
  std::vector<PointId> left;
  std::vector<PointId> right;
  std::vector<std::vector<std::size_t>> adjacency;  // per left node, ascending right indices
  double eta = 0.0;
};

struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (left index, right index), by left

  std::size_t size() const noexcept { return pairs.size(); }
};

inline constexpr std::size_t kHopcroftKarpThreshold = 64;

/// left = members of `cl_set` not in `centers`; right = centers not in `cl_set`.
ThresholdBipartiteGraph build_threshold_graph(const CLSet& cl_set, std::span<const PointId> centers,
                                              double eta, const ConstraintSystem& system,
                                              const Dataset& ds);

/// Maximum-cardinality matching. Plain augmenting paths up to
/// kHopcroftKarpThreshold left nodes, Hopcroft-Karp above.
Matching maximum_matching(const ThresholdBipartiteGraph& g);

Matching augmenting_path_matching(const ThresholdBipartiteGraph& g);
Matching hopcroft_karp_matching(const ThresholdBipartiteGraph& g);

/// |Y \ centers| minus the maximum matching size; 0 means Y is served.
std::size_t matching_deficiency(const CLSet& cl_set, std::span<const PointId> centers, double eta,
                                const ConstraintSystem& system, const Dataset& ds);

/// True iff every CL set's unserved members admit a perfect matching into
/// the remaining centers within eta.
bool dms_check(std::span<const PointId> gamma, std::span<const CLSet> cl, double eta,
               const ConstraintSystem& system, const Dataset& ds);

}  // namespace lsckc
