#include "lsckc/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "lsckc/constraints.hpp"
#include "lsckc/errors.hpp"
#include "lsckc/matching.hpp"

namespace lsckc {

namespace {

/// Necessary condition: every point and ML set can reach some center.
bool reaches_all(const CenterSet& centers, const Instance& inst, double r) {
  const auto& ds = inst.data;
  for (PointId p = 0; p < ds.size(); ++p)
    if (!within(dist_to_set(p, centers, ds), r)) return false;
  for (const auto& x : inst.constraints.ml)
    if (!within(ml_set_distance(x, centers, ds), r)) return false;
  return true;
}

/// Calls `visit` on every size-m subset of {0..n-1} in lexicographic order
/// until it returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t m, Visit&& visit) {
  CenterSet comb(m);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    if (visit(comb)) return true;
    std::size_t i = m;
    while (i > 0 && comb[i - 1] == n - m + i - 1) --i;
    if (i == 0) return false;
    ++comb[i - 1];
    for (std::size_t j = i; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
}

/// ML-aware nearest-center radius: ML sets are measured as big points.
double unit_radius(const CenterSet& centers, const Instance& inst) {
  const auto& ds = inst.data;
  double r = 0.0;
  for (PointId p = 0; p < ds.size(); ++p)
    if (!inst.constraints.in_ml(p)) r = std::max(r, dist_to_set(p, centers, ds));
  for (const auto& x : inst.constraints.ml) r = std::max(r, ml_set_distance(x, centers, ds));
  return r;
}

}  // namespace

ExactResult exact_opt(const Instance& instance) {
  const std::size_t n = instance.data.size();
  if (n > kExactSizeLimit)
    throw InputError("exact solver limited to n <= " + std::to_string(kExactSizeLimit) +
                     " (got n=" + std::to_string(n) + ")");
  ExactResult out;
  if (auto errors = validate(instance); !errors.empty()) {
    out.errors = std::move(errors);
    return out;
  }
  const auto radii = search_radii(instance.data);
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(instance.k), n);

  auto feasible_at = [&](double r, ExactResult* witness) {
    return for_each_subset(n, m, [&](const CenterSet& c) {
      if (!reaches_all(c, instance, r)) return false;
      auto a = find_assignment(c, instance, r, 0);
      if (!a) return false;
      if (witness) {
        witness->centers = c;
        witness->assignment = std::move(*a);
      }
      return true;
    });
  };

  // Exact feasibility is monotone in r, so bisect the ascending radii.
  std::size_t lo = 0, hi = radii.size();
  if (!feasible_at(radii.back(), nullptr)) {
    out.errors.push_back("no feasible clustering with k centers");
    return out;
  }
  hi = radii.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible_at(radii[mid], nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  out.feasible = feasible_at(radii[hi], &out);
  out.radius = radii[hi];
  return out;
}

CenterSet gonzalez(const Dataset& ds, int k) {
  const std::size_t n = ds.size();
  if (k < 1) throw InputError("k must be at least 1");
  if (n == 0) return {};
  const std::size_t target = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  std::vector<PointId> chosen{0};
  std::vector<double> gap(n);
  for (PointId p = 0; p < n; ++p) gap[p] = ds.distance(p, 0);
  gap[0] = -1.0;
  while (chosen.size() < target) {
    PointId far = 0;
    double far_d = -1.0;
    for (PointId p = 0; p < n; ++p)
      if (gap[p] > far_d) {
        far_d = gap[p];
        far = p;
      }
    chosen.push_back(far);
    for (PointId p = 0; p < n; ++p) gap[p] = std::min(gap[p], ds.distance(p, far));
    gap[far] = -1.0;  // never re-picked, even among duplicates
  }
  return make_center_set(std::move(chosen));
}

Solution gonzalez_solution(const Instance& instance) {
  Solution s;
  if (auto errors = validate(instance); !errors.empty()) {
    s.errors = std::move(errors);
    return s;
  }
  s.centers = gonzalez(instance.data, instance.k);
  const auto a = nearest_assignment(s.centers, instance);
  s.assignment = a.center_of;
  s.radius = a.radius;
  s.nearest_center_radius = a.radius;
  s.probed_eta = a.radius;
  s.violations = a.violations;
  s.guarantee = Guarantee::best_effort;
  return s;
}

Solution greedy_constrained(const Instance& instance) {
  Solution s;
  if (auto errors = validate(instance); !errors.empty()) {
    s.errors = std::move(errors);
    return s;
  }
  const auto& sys = instance.constraints;
  const auto& ds = instance.data;
  const std::size_t k = static_cast<std::size_t>(instance.k);

  CenterSet centers = gonzalez(ds, instance.k);
  const std::size_t max_rounds = 2 * ds.size() + 2;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const double radius = unit_radius(centers, instance);
    std::optional<PointId> promote;
    for (const auto& y : sys.cl) {
      const auto g = build_threshold_graph(y, centers, radius, sys, ds);
      const auto m = maximum_matching(g);
      if (m.size() == g.left.size()) continue;
      std::vector<char> matched(g.left.size(), 0);
      for (auto [l, r] : m.pairs) matched[l] = 1;
      double far_d = -1.0;
      for (std::size_t l = 0; l < g.left.size(); ++l) {
        if (matched[l]) continue;
        double d = kInfinity;
        for (PointId c : centers) d = std::min(d, effective_distance(g.left[l], c, sys, ds));
        if (d > far_d) {
          far_d = d;
          promote = g.left[l];
        }
      }
      break;
    }
    if (!promote) break;
    centers.insert(std::lower_bound(centers.begin(), centers.end(), *promote), *promote);
    if (centers.size() <= k) continue;

    // Evict the center whose removal raises the radius least; CL members last.
    auto pick_victim = [&](bool allow_constrained) -> std::optional<PointId> {
      std::optional<PointId> victim;
      double best = kInfinity;
      for (PointId c : centers) {
        if (c == *promote || (!allow_constrained && sys.in_cl(c))) continue;
        CenterSet trial;
        for (PointId d : centers)
          if (d != c) trial.push_back(d);
        const double r = unit_radius(trial, instance);
        if (r < best) {
          best = r;
          victim = c;
        }
      }
      return victim;
    };
    auto victim = pick_victim(false);
    if (!victim) victim = pick_victim(true);
    if (!victim) break;
    centers.erase(std::find(centers.begin(), centers.end(), *victim));
  }

  // Smallest radius at which these centers admit a valid assignment.
  const auto radii = search_radii(ds);
  std::size_t probes = 1;
  auto best = find_assignment(centers, instance, radii.back());
  if (!best) {
    s.probe_count = probes;
    s.errors.push_back("greedy centers admit no constraint-respecting assignment");
    return s;
  }
  std::size_t lo = 0, hi = radii.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++probes;
    if (auto a = find_assignment(centers, instance, radii[mid])) {
      best = std::move(a);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  s.centers = centers;
  s.assignment = best->center_of;
  s.radius = clustering_cost(*best, ds);
  s.nearest_center_radius = nearest_center_radius(centers, ds);
  s.probed_eta = radii[hi];
  s.probe_count = probes;
  s.violations = best->violations;
  s.guarantee = Guarantee::best_effort;
  return s;
}

}  // namespace lsckc
