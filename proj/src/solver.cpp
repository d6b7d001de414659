#include "lsckc/solver.hpp"

#include <algorithm>
#include <unordered_set>

#include "lsckc/matching.hpp"
#include "lsckc/seeding.hpp"

namespace lsckc {

namespace {

CenterSet set_union(const CenterSet& a, const CenterSet& b) {
  CenterSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const CenterSet& s, PointId p) { return std::binary_search(s.begin(), s.end(), p); }

/// Swap scan state for one pool. Each CL set keeps the centers its current
/// maximum matching uses; removing (u, v) can only break sets that contain
/// u or v or whose matching uses them, and adding p never breaks a set.
class SwapSearch {
 public:
  SwapSearch(const CenterSet& fixed, const CenterSet& pool, const Instance& instance, double eta)
      : fixed_(fixed),
        pool_(pool),
        inst_(instance),
        eta_(eta),
        centers_(set_union(fixed, pool)),
        users_(instance.data.size()) {}

  std::optional<SwapCandidate> find() {
    const auto& sys = inst_.constraints;
    const auto& ds = inst_.data;
    for (std::size_t s = 0; s < sys.cl.size(); ++s) {
      const auto g = build_threshold_graph(sys.cl[s], centers_, eta_, sys, ds);
      const auto m = maximum_matching(g);
      if (m.size() != g.left.size()) return std::nullopt;
      for (auto [l, r] : m.pairs) users_[g.right[r]].push_back(s);
    }

    const std::size_t m = pool_.size();
    if (m < 2) return std::nullopt;
    pairs_.assign(m * m, PairState{});
    const auto candidates = sys.cl_points();
    for (PointId p : candidates) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          auto& st = pair_state(i, j);
          if (st.dead) continue;
          if (accepts(st, p, pool_[i], pool_[j])) return SwapCandidate{p, pool_[i], pool_[j]};
        }
      }
    }
    return std::nullopt;
  }

 private:
  struct PairState {
    bool computed = false;
    bool dead = false;
    std::vector<std::size_t> broken;  // CL sets one center short after removal
  };

  PairState& pair_state(std::size_t i, std::size_t j) {
    auto& st = pairs_[i * pool_.size() + j];
    if (st.computed) return st;
    st.computed = true;
    const PointId u = pool_[i];
    const PointId v = pool_[j];
    const auto& sys = inst_.constraints;

    std::vector<std::size_t> affected;
    for (PointId x : {u, v}) {
      affected.insert(affected.end(), users_[x].begin(), users_[x].end());
      const auto& own = sys.cl_sets_of(x);
      affected.insert(affected.end(), own.begin(), own.end());
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

    if (affected.empty()) return st;
    const CenterSet removed = without(u, v);
    for (std::size_t s : affected) {
      const std::size_t deficiency = matching_deficiency(sys.cl[s], removed, eta_, sys, inst_.data);
      if (deficiency >= 2) {
        // A single added center raises each set's matching by at most one.
        st.dead = true;
        st.broken.clear();
        return st;
      }
      if (deficiency == 1) st.broken.push_back(s);
    }
    return st;
  }

  CenterSet without(PointId u, PointId v) const {
    CenterSet out;
    out.reserve(centers_.size());
    for (PointId c : centers_)
      if (c != u && c != v) out.push_back(c);
    return out;
  }

  bool accepts(const PairState& st, PointId p, PointId u, PointId v) const {
    if (st.broken.empty()) return true;
    if (p != u && p != v && contains(fixed_, p)) return false;
    if (p != u && p != v && contains(pool_, p)) return false;
    const auto& sys = inst_.constraints;
    const auto& ds = inst_.data;
    // Cheap necessary condition: p must be able to serve or be a member of each broken set.
    for (std::size_t s : st.broken) {
      const auto& y = sys.cl[s];
      bool helps = std::find(y.begin(), y.end(), p) != y.end();
      for (std::size_t t = 0; !helps && t < y.size(); ++t)
        helps = !(contains(centers_, y[t]) && y[t] != u && y[t] != v) &&
                within(effective_distance(y[t], p, sys, ds), eta_);
      if (!helps) return false;
    }
    CenterSet trial = without(u, v);
    trial.insert(std::lower_bound(trial.begin(), trial.end(), p), p);
    for (std::size_t s : st.broken)
      if (matching_deficiency(sys.cl[s], trial, eta_, sys, ds) != 0) return false;
    return true;
  }

  const CenterSet& fixed_;
  const CenterSet& pool_;
  const Instance& inst_;
  double eta_;
  CenterSet centers_;
  std::vector<std::vector<std::size_t>> users_;  // per center: CL sets whose matching uses it
  std::vector<PairState> pairs_;
};

}  // namespace

CenterSet ProbeResult::centers() const { return set_union(c1, c2); }

CenterSet cl_candidate_centers(const CenterSet& c1, const Instance& instance, double eta) {
  const auto& sys = instance.constraints;
  CenterSet centers = c1;
  for (const auto& y : sys.cl) {
    const auto g = build_threshold_graph(y, centers, eta, sys, instance.data);
    const auto m = maximum_matching(g);
    if (m.size() == g.left.size()) continue;
    std::vector<char> matched(g.left.size(), 0);
    for (auto [l, r] : m.pairs) matched[l] = 1;
    for (std::size_t l = 0; l < g.left.size(); ++l)
      if (!matched[l]) centers.insert(std::lower_bound(centers.begin(), centers.end(), g.left[l]), g.left[l]);
  }
  CenterSet added;
  std::set_difference(centers.begin(), centers.end(), c1.begin(), c1.end(), std::back_inserter(added));
  return added;
}

std::optional<SwapCandidate> find_enhanced_swap(const CenterSet& fixed, const CenterSet& pool,
                                                const Instance& instance, double eta) {
  return SwapSearch(fixed, pool, instance, eta).find();
}

LocalSearchResult local_search(const CenterSet& fixed, CenterSet pool, const Instance& instance,
                               double eta, const SwapObserver& observer) {
  LocalSearchResult out;
  while (auto swap = find_enhanced_swap(fixed, pool, instance, eta)) {
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](PointId c) { return c == swap->u || c == swap->v; }),
               pool.end());
    if (!contains(fixed, swap->p) && !contains(pool, swap->p))
      pool.insert(std::lower_bound(pool.begin(), pool.end(), swap->p), swap->p);
    out.swaps.push_back(*swap);
    if (observer) observer(*swap, fixed, pool);
  }
  out.pool = std::move(pool);
  return out;
}

ProbeResult solve_with_threshold(const Instance& instance, double eta, const SwapObserver& observer) {
  ProbeResult r;
  r.eta = eta;
  r.c1 = seed_centers(instance.data, instance.constraints.ml, eta);
  const CenterSet candidates = cl_candidate_centers(r.c1, instance, eta);
  r.initial_c2_size = candidates.size();
  auto ls = local_search(r.c1, candidates, instance, eta, observer);
  r.c2 = std::move(ls.pool);
  r.swaps_applied = ls.swaps.size();
  r.audit = std::move(ls.swaps);

  const CenterSet all = r.centers();
  r.coverage_ok = coverage_feasible(all, instance, eta);
  if (r.coverage_ok && all.size() <= static_cast<std::size_t>(instance.k)) {
    r.assignment = find_assignment(all, instance, eta);
    r.assignable = r.assignment.has_value();
  }
  r.success = r.assignable;
  return r;
}

bool coverage_feasible(std::span<const PointId> centers, const Instance& instance, double eta) {
  const auto& sys = instance.constraints;
  const auto& ds = instance.data;
  const CenterSet sorted = make_center_set({centers.begin(), centers.end()});
  for (PointId p = 0; p < ds.size(); ++p) {
    if (sys.in_ml(p) || sys.in_cl(p)) continue;
    if (!within(dist_to_set(p, sorted, ds), eta)) return false;
  }
  for (const auto& x : sys.ml)
    if (!within(ml_set_distance(x, sorted, ds), eta)) return false;
  return dms_check(sorted, sys.cl, eta, sys, ds);
}

}  // namespace lsckc
