#include "lsckc/constraints.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "lsckc/errors.hpp"

namespace lsckc {

namespace {

std::vector<PointId> dedupe_in_order(const std::vector<PointId>& ids) {
  std::vector<PointId> out;
  std::unordered_set<PointId> seen;
  for (PointId id : ids)
    if (seen.insert(id).second) out.push_back(id);
  return out;
}

class UnionFind {
 public:
  PointId find(PointId x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_.emplace(x, x);
      return x;
    }
    PointId root = x;
    while (parent_.at(root) != root) root = parent_.at(root);
    while (parent_.at(x) != root) {
      PointId next = parent_.at(x);
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  void unite(PointId a, PointId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::unordered_map<PointId, PointId> parent_;
};

const std::vector<std::size_t> kNoSets;

}  // namespace

std::optional<std::size_t> ConstraintSystem::ml_set_of(PointId p) const {
  auto it = ml_of.find(p);
  if (it == ml_of.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& ConstraintSystem::cl_sets_of(PointId p) const {
  auto it = cl_of.find(p);
  return it == cl_of.end() ? kNoSets : it->second;
}

std::vector<PointId> ConstraintSystem::cl_points() const {
  std::vector<PointId> out;
  out.reserve(cl_of.size());
  for (const auto& [p, sets] : cl_of) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

ConstraintSystem normalize(const RawConstraints& raw) {
  ConstraintSystem out;

  UnionFind uf;
  for (const auto& set : raw.ml) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      uf.find(set[i]);
      if (i > 0) uf.unite(set[0], set[i]);
    }
  }
  std::map<PointId, std::size_t> group_of_root;
  std::vector<MLSet> groups;
  std::unordered_set<PointId> placed;
  for (const auto& set : raw.ml) {
    for (PointId id : set) {
      if (!placed.insert(id).second) continue;
      const PointId root = uf.find(id);
      auto [it, inserted] = group_of_root.emplace(root, groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].push_back(id);
    }
  }
  for (auto& g : groups) {
    if (g.size() < 2) continue;
    const std::size_t index = out.ml.size();
    for (PointId id : g) out.ml_of.emplace(id, index);
    out.ml.push_back(std::move(g));
  }

  for (const auto& set : raw.cl) {
    CLSet members = dedupe_in_order(set);
    if (members.size() < 2) continue;
    std::unordered_set<std::size_t> ml_hit;
    for (PointId id : members) {
      if (auto ml = out.ml_set_of(id); ml && !ml_hit.insert(*ml).second)
        throw InfeasibleError("CL set " + std::to_string(out.cl.size()) +
                              " contains two members of ML set " + std::to_string(*ml));
    }
    const std::size_t index = out.cl.size();
    for (PointId id : members) out.cl_of[id].push_back(index);
    out.cl.push_back(std::move(members));
  }

  // Units are ML sets or single points; a unit in two CL sets breaks disjointness.
  std::unordered_map<PointId, std::size_t> unit_owner;
  for (std::size_t i = 0; i < out.cl.size() && out.disjoint_cl; ++i) {
    for (PointId id : out.cl[i]) {
      const auto ml = out.ml_set_of(id);
      const PointId unit = ml ? out.ml[*ml].front() : id;
      auto [it, inserted] = unit_owner.emplace(unit, i);
      if (!inserted && it->second != i) {
        out.disjoint_cl = false;
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const ConstraintSystem& system, int k, std::size_t n) {
  std::vector<std::string> errors;
  if (k < 1) errors.push_back("k must be at least 1 (got " + std::to_string(k) + ")");
  auto check_ids = [&](const std::vector<PointId>& set, const char* kind, std::size_t index) {
    for (PointId id : set)
      if (id >= n)
        errors.push_back("id out of range: " + std::to_string(id) + " in " + kind + " set " +
                         std::to_string(index) + " (n=" + std::to_string(n) + ")");
  };
  for (std::size_t i = 0; i < system.cl.size(); ++i) {
    if (k >= 1 && system.cl[i].size() > static_cast<std::size_t>(k))
      errors.push_back("CL set exceeds k: set " + std::to_string(i) + " has " +
                       std::to_string(system.cl[i].size()) + " members, k=" + std::to_string(k));
    check_ids(system.cl[i], "CL", i);
  }
  for (std::size_t i = 0; i < system.ml.size(); ++i) check_ids(system.ml[i], "ML", i);
  return errors;
}

double effective_distance(PointId p, PointId c, const ConstraintSystem& system, const Dataset& ds) {
  const auto ml = system.ml_set_of(p);
  if (!ml) return ds.distance(p, c);
  double worst = 0.0;
  for (PointId x : system.ml[*ml]) worst = std::max(worst, ds.distance(x, c));
  return worst;
}

double ml_set_distance(const MLSet& set, std::span<const PointId> centers, const Dataset& ds) {
  double best = kInfinity;
  for (PointId c : centers) {
    double worst = 0.0;
    for (PointId x : set) {
      worst = std::max(worst, ds.distance(x, c));
      if (worst >= best) break;
    }
    best = std::min(best, worst);
  }
  return best;
}

}  // namespace lsckc
