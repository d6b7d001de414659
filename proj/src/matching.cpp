#include "lsckc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace lsckc {

namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

Matching collect(const std::vector<std::size_t>& right_of_left) {
  Matching m;
  for (std::size_t l = 0; l < right_of_left.size(); ++l)
    if (right_of_left[l] != kUnmatched) m.pairs.emplace_back(l, right_of_left[l]);
  return m;
}

bool augment(const ThresholdBipartiteGraph& g, std::size_t l, std::vector<char>& visited,
             std::vector<std::size_t>& left_of_right, std::vector<std::size_t>& right_of_left) {
  for (std::size_t r : g.adjacency[l]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (left_of_right[r] == kUnmatched ||
        augment(g, left_of_right[r], visited, left_of_right, right_of_left)) {
      left_of_right[r] = l;
      right_of_left[l] = r;
      return true;
    }
  }
  return false;
}

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const ThresholdBipartiteGraph& g)
      : g_(g),
        right_of_left_(g.left.size(), kUnmatched),
        left_of_right_(g.right.size(), kUnmatched),
        layer_(g.left.size(), 0) {}

  std::vector<std::size_t> run() {
    while (bfs()) {
      next_edge_.assign(g_.left.size(), 0);
      for (std::size_t l = 0; l < g_.left.size(); ++l)
        if (right_of_left_[l] == kUnmatched) dfs(l);
    }
    return right_of_left_;
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < g_.left.size(); ++l) {
      if (right_of_left_[l] == kUnmatched) {
        layer_[l] = 0;
        queue.push(l);
      } else {
        layer_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t l = queue.front();
      queue.pop();
      for (std::size_t r : g_.adjacency[l]) {
        const std::size_t next = left_of_right_[r];
        if (next == kUnmatched) {
          found = true;
        } else if (layer_[next] == kInf) {
          layer_[next] = layer_[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t l) {
    const auto& adj = g_.adjacency[l];
    for (std::size_t& i = next_edge_[l]; i < adj.size(); ++i) {
      const std::size_t r = adj[i];
      const std::size_t next = left_of_right_[r];
      if (next == kUnmatched || (layer_[next] == layer_[l] + 1 && dfs(next))) {
        right_of_left_[l] = r;
        left_of_right_[r] = l;
        ++i;
        return true;
      }
    }
    layer_[l] = kInf;
    return false;
  }

  const ThresholdBipartiteGraph& g_;
  std::vector<std::size_t> right_of_left_;
  std::vector<std::size_t> left_of_right_;
  std::vector<std::size_t> layer_;
  std::vector<std::size_t> next_edge_;
};

bool contains(const CLSet& set, PointId p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

ThresholdBipartiteGraph build_threshold_graph(const CLSet& cl_set, std::span<const PointId> centers,
                                              double eta, const ConstraintSystem& system,
                                              const Dataset& ds) {
  ThresholdBipartiteGraph g;
  g.eta = eta;
  for (PointId c : centers)
    if (!contains(cl_set, c)) g.right.push_back(c);
  for (PointId y : cl_set)
    if (std::find(centers.begin(), centers.end(), y) == centers.end()) g.left.push_back(y);
  g.adjacency.resize(g.left.size());
  for (std::size_t l = 0; l < g.left.size(); ++l) {
    for (std::size_t r = 0; r < g.right.size(); ++r) {
      if (within(effective_distance(g.left[l], g.right[r], system, ds), eta))
        g.adjacency[l].push_back(r);
    }
  }
  return g;
}

Matching augmenting_path_matching(const ThresholdBipartiteGraph& g) {
  std::vector<std::size_t> right_of_left(g.left.size(), kUnmatched);
  std::vector<std::size_t> left_of_right(g.right.size(), kUnmatched);
  std::vector<char> visited(g.right.size());
  for (std::size_t l = 0; l < g.left.size(); ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(g, l, visited, left_of_right, right_of_left);
  }
  return collect(right_of_left);
}

Matching hopcroft_karp_matching(const ThresholdBipartiteGraph& g) {
  return collect(HopcroftKarp(g).run());
}

Matching maximum_matching(const ThresholdBipartiteGraph& g) {
  if (g.left.size() > kHopcroftKarpThreshold) return hopcroft_karp_matching(g);
  return augmenting_path_matching(g);
}

std::size_t matching_deficiency(const CLSet& cl_set, std::span<const PointId> centers, double eta,
                                const ConstraintSystem& system, const Dataset& ds) {
  const auto g = build_threshold_graph(cl_set, centers, eta, system, ds);
  if (g.left.empty()) return 0;
  if (g.right.size() == 0) return g.left.size();
  return g.left.size() - maximum_matching(g).size();
}

bool dms_check(std::span<const PointId> gamma, std::span<const CLSet> cl, double eta,
               const ConstraintSystem& system, const Dataset& ds) {
  for (const auto& y : cl)
    if (matching_deficiency(y, gamma, eta, system, ds) != 0) return false;
  return true;
}

}  // namespace lsckc
