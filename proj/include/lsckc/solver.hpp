#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lsckc/assignment.hpp"
#include "lsckc/instance.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

/// Add `p`, drop `u` and `v` (u < v, both from the swap pool). `p` may
/// already be a center, which turns the swap into a pure removal.
struct SwapCandidate {
  PointId p = 0;
  PointId u = 0;
  PointId v = 0;

  bool operator==(const SwapCandidate&) const = default;
};

/// One run of the threshold algorithm at a fixed eta.
struct ProbeResult {
  double eta = 0.0;
  CenterSet c1;  // ML-aware seeding centers
  CenterSet c2;  // CL-stage centers after local search
  bool coverage_ok = false;
  bool assignable = false;
  bool success = false;  // |c1 u c2| <= k, coverage holds, an assignment exists
  std::size_t initial_c2_size = 0;
  std::size_t swaps_applied = 0;
  std::vector<SwapCandidate> audit;
  std::optional<Assignment> assignment;

  CenterSet centers() const;
};

/// Called after every applied swap with the updated fixed and pool sets.
using SwapObserver =
    std::function<void(const SwapCandidate&, const CenterSet& fixed, const CenterSet& pool)>;

/// Walks the CL sets in order against a growing center set (starting at
/// `c1`); every member left unmatched by the threshold matching becomes a
/// center. Returns the added centers.
CenterSet cl_candidate_centers(const CenterSet& c1, const Instance& instance, double eta);

/// First enhanced single swap in scan order (p over the CL points ascending,
/// then pool pairs in lexicographic order) that keeps fixed u pool a
/// dominating matching set at eta. nullopt when the pool is swap free, or
/// when fixed u pool is not a dominating matching set to begin with.
std::optional<SwapCandidate> find_enhanced_swap(const CenterSet& fixed, const CenterSet& pool,
                                                const Instance& instance, double eta);

struct LocalSearchResult {
  CenterSet pool;
  std::vector<SwapCandidate> swaps;
};

/// Applies enhanced single swaps until none exists; `fixed` is never touched.
LocalSearchResult local_search(const CenterSet& fixed, CenterSet pool, const Instance& instance,
                               double eta, const SwapObserver& observer = {});

/// Seeding, CL candidate stage, then local search over the CL candidates.
ProbeResult solve_with_threshold(const Instance& instance, double eta,
                                 const SwapObserver& observer = {});

/// Every constraint-free point within eta of a center, every ML set within eta in
/// the max sense, and every CL set passes the matching check.
bool coverage_feasible(std::span<const PointId> centers, const Instance& instance, double eta);

}  // namespace lsckc
