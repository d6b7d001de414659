#include "lsckc/driver.hpp"

#include <algorithm>

namespace lsckc {

std::string_view to_string(SearchStrategy s) {
  return s == SearchStrategy::binary ? "binary" : "linear";
}

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::two_approx:
      return "two_approx";
    case Guarantee::best_effort:
      return "best_effort";
    case Guarantee::infeasible:
      return "infeasible";
  }
  return "infeasible";
}

std::optional<SearchStrategy> parse_strategy(std::string_view name) {
  if (name == "binary") return SearchStrategy::binary;
  if (name == "linear") return SearchStrategy::linear;
  return std::nullopt;
}

std::optional<Guarantee> parse_guarantee(std::string_view name) {
  if (name == "two_approx") return Guarantee::two_approx;
  if (name == "best_effort") return Guarantee::best_effort;
  if (name == "infeasible") return Guarantee::infeasible;
  return std::nullopt;
}

std::vector<double> search_radii(const Dataset& ds) {
  auto radii = candidate_radii(ds);
  if (radii.empty() || radii.front() != 0.0) radii.insert(radii.begin(), 0.0);
  return radii;
}

Solution solution_from_probe(const Instance& instance, const ProbeResult& probe,
                             std::size_t probe_count) {
  Solution s;
  s.probed_eta = probe.eta;
  s.probe_count = probe_count;
  s.swaps_applied = probe.swaps_applied;
  s.initial_c2_size = probe.initial_c2_size;
  if (!probe.success || !probe.assignment) {
    s.guarantee = Guarantee::infeasible;
    s.errors.push_back("no successful probe");
    return s;
  }
  s.centers = probe.centers();
  s.assignment = probe.assignment->center_of;
  s.violations = verify(*probe.assignment, instance.constraints);
  s.radius = clustering_cost(*probe.assignment, instance.data);
  s.nearest_center_radius = nearest_center_radius(s.centers, instance.data);
  s.guarantee = instance.constraints.disjoint_cl ? Guarantee::two_approx : Guarantee::best_effort;
  return s;
}

Solution solve(const Instance& instance, SearchStrategy strategy) {
  if (auto errors = validate(instance); !errors.empty()) {
    Solution s;
    s.errors = std::move(errors);
    return s;
  }
  const auto radii = search_radii(instance.data);
  std::size_t probes = 0;
  auto probe = [&](std::size_t index) {
    ++probes;
    return solve_with_threshold(instance, 2.0 * radii[index]);
  };

  if (strategy == SearchStrategy::linear) {
    ProbeResult last;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      last = probe(i);
      if (last.success) return solution_from_probe(instance, last, probes);
    }
    return solution_from_probe(instance, last, probes);
  }

  std::size_t hi = radii.size() - 1;
  ProbeResult best = probe(hi);
  if (!best.success) return solution_from_probe(instance, best, probes);
  // Invariant: probe(hi) succeeded; every index <= lo that was probed failed.
  std::ptrdiff_t lo = -1;
  while (static_cast<std::ptrdiff_t>(hi) - lo > 1) {
    const std::size_t mid = static_cast<std::size_t>(lo + (static_cast<std::ptrdiff_t>(hi) - lo) / 2);
    ProbeResult r = probe(mid);
    if (r.success) {
      hi = mid;
      best = std::move(r);
    } else {
      lo = static_cast<std::ptrdiff_t>(mid);
    }
  }
  return solution_from_probe(instance, best, probes);
}

}  // namespace lsckc
