#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsckc/assignment.hpp"
#include "lsckc/instance.hpp"
#include "lsckc/solver.hpp"

namespace lsckc {

enum class SearchStrategy { binary, linear };

/// two_approx: disjoint CL and the radius search succeeded, so radius <= 2 opt.
/// best_effort: a valid solution without that bound (intersected CL, baselines).
enum class Guarantee { two_approx, best_effort, infeasible };

std::string_view to_string(SearchStrategy s);
std::string_view to_string(Guarantee g);
std::optional<SearchStrategy> parse_strategy(std::string_view name);
std::optional<Guarantee> parse_guarantee(std::string_view name);

struct Solution {
  CenterSet centers;
  std::vector<PointId> assignment;  // per point: its center; empty when infeasible
  double radius = 0.0;              // realized, recomputed from `assignment`
  double nearest_center_radius = 0.0;
  double probed_eta = 0.0;
  std::size_t probe_count = 0;
  std::size_t swaps_applied = 0;
  std::size_t initial_c2_size = 0;
  Guarantee guarantee = Guarantee::infeasible;
  std::vector<Violation> violations;
  std::vector<std::string> errors;
};

/// Radii worth probing: 0 followed by every distinct pairwise distance.
std::vector<double> search_radii(const Dataset& ds);

/// Searches r over search_radii(), probing the threshold algorithm at
/// eta = 2r. Binary search keeps probe(hi) successful and probe(lo) failed
/// (lo starting before the first radius) and narrows until they are
/// adjacent; linear returns the first successful r. Every r at or above the
/// optimum succeeds on disjoint-CL instances, so either way radius <= 2 opt
/// there. Invalid instances come back infeasible with `errors` filled.
Solution solve(const Instance& instance, SearchStrategy strategy = SearchStrategy::binary);

/// Solution for one successful (or failed) probe.
Solution solution_from_probe(const Instance& instance, const ProbeResult& probe,
                             std::size_t probe_count);

}  // namespace lsckc
