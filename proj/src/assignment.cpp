#include "lsckc/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lsckc/matching.hpp"
#include "lsckc/solver.hpp"

namespace lsckc {

namespace {

constexpr PointId kNoCenter = std::numeric_limits<PointId>::max();

PointId nearest_center(PointId p, std::span<const PointId> centers, const Dataset& ds) {
  PointId best = kNoCenter;
  double best_d = kInfinity;
  for (PointId c : centers) {
    const double d = ds.distance(p, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

PointId best_ml_center(const MLSet& set, std::span<const PointId> centers, const Dataset& ds) {
  PointId best = kNoCenter;
  double best_d = kInfinity;
  for (PointId c : centers) {
    double worst = 0.0;
    for (PointId x : set) worst = std::max(worst, ds.distance(x, c));
    if (worst < best_d) {
      best_d = worst;
      best = c;
    }
  }
  return best;
}

void finish(Assignment& a, const Instance& instance) {
  a.radius = clustering_cost(a, instance.data);
  a.violations = verify(a, instance.constraints);
}

bool fits(const Assignment& a, const Dataset& ds, double eta) {
  for (PointId p = 0; p < a.center_of.size(); ++p)
    if (a.center_of[p] == kNoCenter || !within(ds.distance(p, a.center_of[p]), eta)) return false;
  return a.violations.empty();
}

Assignment witness_assignment(std::span<const PointId> centers, const Instance& instance, double eta) {
  const auto& ds = instance.data;
  const auto& sys = instance.constraints;
  Assignment a;
  a.center_of.assign(ds.size(), kNoCenter);
  if (centers.empty()) {
    finish(a, instance);
    return a;
  }
  std::vector<PointId> ml_pin(sys.ml.size(), kNoCenter);

  auto pin = [&](PointId y, PointId c) {
    if (a.center_of[y] == kNoCenter) a.center_of[y] = c;
    if (auto ml = sys.ml_set_of(y); ml && ml_pin[*ml] == kNoCenter) ml_pin[*ml] = c;
  };

  for (const auto& y : sys.cl) {
    for (PointId member : y)
      if (std::binary_search(centers.begin(), centers.end(), member)) pin(member, member);
    const auto g = build_threshold_graph(y, centers, eta, sys, ds);
    for (auto [l, r] : maximum_matching(g).pairs) pin(g.left[l], g.right[r]);
  }
  for (std::size_t i = 0; i < sys.ml.size(); ++i) {
    const PointId c = ml_pin[i] != kNoCenter ? ml_pin[i] : best_ml_center(sys.ml[i], centers, ds);
    for (PointId x : sys.ml[i]) a.center_of[x] = c;
  }
  for (PointId p = 0; p < ds.size(); ++p)
    if (a.center_of[p] == kNoCenter) a.center_of[p] = nearest_center(p, centers, ds);
  finish(a, instance);
  return a;
}

/// Exact search over units (ML sets, or single ML-free points).
class UnitSearch {
 public:
  UnitSearch(std::span<const PointId> centers, const Instance& instance, double eta,
             std::size_t budget)
      : centers_(centers), inst_(instance), eta_(eta), budget_(budget) {}

  std::optional<Assignment> run() {
    const auto& ds = inst_.data;
    const auto& sys = inst_.constraints;
    build_units();

    // CL sets expressed over units; union-find links units sharing a CL set.
    std::vector<std::size_t> parent(units_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    cl_units_.resize(sys.cl.size());
    for (std::size_t i = 0; i < sys.cl.size(); ++i) {
      for (PointId y : sys.cl[i]) cl_units_[i].push_back(unit_of_[y]);
      for (std::size_t u : cl_units_[i]) parent[find(u)] = find(cl_units_[i].front());
    }

    std::vector<PointId> unit_center(units_.size(), kNoCenter);
    std::vector<std::vector<std::size_t>> comp_sets(units_.size());
    for (std::size_t i = 0; i < sys.cl.size(); ++i) comp_sets[find(cl_units_[i].front())].push_back(i);

    std::vector<char> in_cl(units_.size(), 0);
    for (const auto& cu : cl_units_)
      for (std::size_t u : cu) in_cl[u] = 1;

    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (in_cl[u]) continue;
      const auto dom = domain(u);
      if (dom.empty()) return std::nullopt;
      unit_center[u] = dom.front();
    }
    for (std::size_t root = 0; root < units_.size(); ++root) {
      const auto& sets = comp_sets[root];
      if (sets.empty()) continue;
      const bool ok = sets.size() == 1 ? solve_single(cl_units_[sets.front()], unit_center)
                                       : solve_component(sets, unit_center);
      if (!ok) return std::nullopt;
    }

    Assignment a;
    a.center_of.assign(ds.size(), kNoCenter);
    for (std::size_t u = 0; u < units_.size(); ++u)
      for (PointId x : units_[u]) a.center_of[x] = unit_center[u];
    finish(a, inst_);
    return a;
  }

 private:
  void build_units() {
    const auto& sys = inst_.constraints;
    unit_of_.assign(inst_.data.size(), 0);
    for (const auto& x : sys.ml) {
      for (PointId p : x) unit_of_[p] = units_.size();
      units_.push_back(x);
    }
    for (PointId p = 0; p < inst_.data.size(); ++p) {
      if (sys.in_ml(p)) continue;
      unit_of_[p] = units_.size();
      units_.push_back({p});
    }
  }

  double unit_distance(std::size_t u, PointId c) const {
    double worst = 0.0;
    for (PointId x : units_[u]) worst = std::max(worst, inst_.data.distance(x, c));
    return worst;
  }

  /// Centers within eta of the unit, nearest first then by id.
  std::vector<PointId> domain(std::size_t u) const {
    std::vector<std::pair<double, PointId>> scored;
    for (PointId c : centers_) {
      const double d = unit_distance(u, c);
      if (within(d, eta_)) scored.emplace_back(d, c);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<PointId> out;
    out.reserve(scored.size());
    for (const auto& s : scored) out.push_back(s.second);
    return out;
  }

  bool solve_single(const std::vector<std::size_t>& units, std::vector<PointId>& unit_center) const {
    ThresholdBipartiteGraph g;
    g.eta = eta_;
    g.right.assign(centers_.begin(), centers_.end());
    for (std::size_t u : units) {
      g.left.push_back(units_[u].front());
      std::vector<std::size_t> adj;
      for (std::size_t r = 0; r < g.right.size(); ++r)
        if (within(unit_distance(u, g.right[r]), eta_)) adj.push_back(r);
      g.adjacency.push_back(std::move(adj));
    }
    const auto m = maximum_matching(g);
    if (m.size() != units.size()) return false;
    for (auto [l, r] : m.pairs) unit_center[units[l]] = g.right[r];
    return true;
  }

  bool solve_component(const std::vector<std::size_t>& sets, std::vector<PointId>& unit_center) {
    // Variables are the component's units; neighbors share a CL set.
    std::vector<std::size_t> vars;
    for (std::size_t s : sets)
      for (std::size_t u : cl_units_[s]) vars.push_back(u);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const std::size_t m = vars.size();
    auto index_of = [&](std::size_t u) {
      return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), u) - vars.begin());
    };
    std::vector<std::vector<std::size_t>> neighbors(m);
    for (std::size_t s : sets)
      for (std::size_t a : cl_units_[s])
        for (std::size_t b : cl_units_[s])
          if (a != b) neighbors[index_of(a)].push_back(index_of(b));
    for (auto& nb : neighbors) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    std::vector<std::vector<PointId>> domains(m);
    for (std::size_t i = 0; i < m; ++i) {
      domains[i] = domain(vars[i]);
      if (domains[i].empty()) return false;
    }

    std::vector<PointId> value(m, kNoCenter);
    nodes_ = 0;
    if (!backtrack(domains, neighbors, value, 0)) return false;
    for (std::size_t i = 0; i < m; ++i) unit_center[vars[i]] = value[i];
    return true;
  }

  bool backtrack(const std::vector<std::vector<PointId>>& domains,
                 const std::vector<std::vector<std::size_t>>& neighbors, std::vector<PointId>& value,
                 std::size_t assigned) {
    const std::size_t m = domains.size();
    if (assigned == m) return true;
    if (budget_ != 0 && ++nodes_ > budget_) return false;

    // Minimum remaining values, lowest index on ties.
    std::size_t pick = m;
    std::size_t pick_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < m; ++i) {
      if (value[i] != kNoCenter) continue;
      std::size_t count = 0;
      for (PointId c : domains[i])
        if (available(neighbors[i], value, c)) ++count;
      if (count == 0) return false;
      if (count < pick_count) {
        pick = i;
        pick_count = count;
      }
    }
    for (PointId c : domains[pick]) {
      if (!available(neighbors[pick], value, c)) continue;
      value[pick] = c;
      if (backtrack(domains, neighbors, value, assigned + 1)) return true;
      value[pick] = kNoCenter;
      if (budget_ != 0 && nodes_ > budget_) return false;
    }
    return false;
  }

  static bool available(const std::vector<std::size_t>& nb, const std::vector<PointId>& value,
                        PointId c) {
    for (std::size_t j : nb)
      if (value[j] == c) return false;
    return true;
  }

  std::span<const PointId> centers_;
  const Instance& inst_;
  double eta_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<PointId>> units_;
  std::vector<std::size_t> unit_of_;
  std::vector<std::vector<std::size_t>> cl_units_;
};

}  // namespace

std::optional<Assignment> find_assignment(std::span<const PointId> centers, const Instance& instance,
                                          double eta, std::size_t search_budget) {
  if (centers.empty()) {
    if (instance.data.size() == 0) return Assignment{};
    return std::nullopt;
  }
  if (!std::is_sorted(centers.begin(), centers.end())) {
    const CenterSet sorted = make_center_set({centers.begin(), centers.end()});
    return find_assignment(sorted, instance, eta, search_budget);
  }
  auto witness = witness_assignment(centers, instance, eta);
  if (fits(witness, instance.data, eta)) return witness;
  auto exact = UnitSearch(centers, instance, eta, search_budget).run();
  if (exact && fits(*exact, instance.data, eta)) return exact;
  return std::nullopt;
}

Assignment assign(std::span<const PointId> centers, const Instance& instance, double eta) {
  if (!coverage_feasible(centers, instance, eta))
    throw std::logic_error("assign: center set does not cover the instance within eta");
  if (auto a = find_assignment(centers, instance, eta)) return *a;
  return witness_assignment(centers, instance, eta);
}

Assignment nearest_assignment(std::span<const PointId> centers, const Instance& instance) {
  Assignment a;
  a.center_of.assign(instance.data.size(), kNoCenter);
  for (PointId p = 0; p < instance.data.size(); ++p)
    a.center_of[p] = nearest_center(p, centers, instance.data);
  finish(a, instance);
  return a;
}

double clustering_cost(const Assignment& a, const Dataset& ds) {
  double r = 0.0;
  for (PointId p = 0; p < a.center_of.size(); ++p) {
    if (a.center_of[p] == kNoCenter) return kInfinity;
    r = std::max(r, ds.distance(p, a.center_of[p]));
  }
  return r;
}

std::vector<Violation> verify(const Assignment& a, const ConstraintSystem& system) {
  std::vector<Violation> out;
  auto center = [&](PointId p) { return p < a.center_of.size() ? a.center_of[p] : kNoCenter; };
  for (std::size_t s = 0; s < system.cl.size(); ++s) {
    const auto& y = system.cl[s];
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = i + 1; j < y.size(); ++j)
        if (center(y[i]) == center(y[j]))
          out.push_back({Violation::Kind::cannot_link, s, y[i], y[j]});
  }
  for (std::size_t s = 0; s < system.ml.size(); ++s) {
    const auto& x = system.ml[s];
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (center(x[i]) != center(x[j])) out.push_back({Violation::Kind::must_link, s, x[i], x[j]});
  }
  return out;
}

double nearest_center_radius(std::span<const PointId> centers, const Dataset& ds) {
  double r = 0.0;
  for (PointId p = 0; p < ds.size(); ++p) r = std::max(r, dist_to_set(p, centers, ds));
  return r;
}

}  // namespace lsckc
