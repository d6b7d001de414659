#include "lsckc/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "lsckc/errors.hpp"

namespace lsckc {

namespace {

void check(const GenParams& p) {
  auto fail = [](const std::string& what) { throw InputError("invalid generator parameters: " + what); };
  if (p.k < 1) fail("k must be at least 1");
  if (p.n < static_cast<std::size_t>(p.k)) fail("n must be at least k");
  if (p.dim < 1) fail("dim must be at least 1");
  if (!(p.r_plant > 0.0) || !std::isfinite(p.r_plant)) fail("r_plant must be positive");
  if (!(p.separation >= 4.0)) fail("separation must be at least 4");
  for (double r : {p.cl_ratio, p.ml_ratio, p.intersect_repetition})
    if (!(r >= 0.0 && r <= 1.0)) fail("ratios must lie in [0, 1]");
  if (p.cl_size_min < 2 || p.cl_size_min > p.cl_size_max) fail("CL size range must satisfy 2 <= min <= max");
  if (p.cl_ratio > 0.0 && p.cl_size_min > static_cast<std::size_t>(p.k)) fail("CL sets larger than k are infeasible");
  if (p.ml_size_min < 2 || p.ml_size_min > p.ml_size_max) fail("ML size range must satisfy 2 <= min <= max");
  // Lattice coordinates must stay exactly representable.
  const double side = std::ceil(std::pow(static_cast<double>(p.k), 1.0 / static_cast<double>(p.dim)));
  if (side * (p.separation + 1.0) * p.r_plant > 1e12) fail("lattice too large for the requested spacing");
}

double norm(const std::vector<double>& v, Metric m) {
  const std::vector<double> zero(v.size(), 0.0);
  return metric_distance(v, zero, m);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

GeneratedInstance generate(const GenParams& params) {
  check(params);
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t k = static_cast<std::size_t>(params.k);
  const std::size_t dim = params.dim;
  const double r = params.r_plant;

  // Lattice cells, a random k of them.
  std::size_t side = 1;
  while (true) {
    double cells = std::pow(static_cast<double>(side), static_cast<double>(dim));
    if (cells >= static_cast<double>(k)) break;
    ++side;
  }
  std::size_t total_cells = 1;
  for (std::size_t d = 0; d < dim && total_cells < 4 * k + 16; ++d) total_cells *= side;
  std::vector<std::size_t> cells(total_cells);
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  cells.resize(k);
  std::sort(cells.begin(), cells.end());

  const double spacing = (params.separation + 1.0) * r;
  const double jitter = 0.5 * r / static_cast<double>(dim);
  std::vector<std::vector<double>> anchor_coords(k, std::vector<double>(dim, 0.0));
  for (std::size_t a = 0; a < k; ++a) {
    std::size_t cell = cells[a];
    for (std::size_t d = 0; d < dim; ++d) {
      const double lattice = static_cast<double>(cell % side);
      cell /= side;
      anchor_coords[a][d] = round12(lattice * spacing + (2.0 * unit(rng) - 1.0) * jitter);
    }
  }

  // Cluster sizes: one anchor point each, the rest drawn uniformly.
  std::vector<std::size_t> label;
  label.reserve(params.n);
  for (std::size_t a = 0; a < k; ++a) label.push_back(a);
  for (std::size_t i = k; i < params.n; ++i) label.push_back(uniform_index(rng, k));

  std::vector<std::vector<double>> coords(params.n);
  std::vector<char> is_anchor(params.n, 0);
  for (std::size_t i = 0; i < params.n; ++i) {
    const auto& anchor = anchor_coords[label[i]];
    if (i < k) {
      coords[i] = anchor;
      is_anchor[i] = 1;
      continue;
    }
    std::vector<double> dir(dim);
    double len = 0.0;
    while (!(len > 1e-9)) {
      for (auto& x : dir) x = gauss(rng);
      len = norm(dir, params.metric);
    }
    // Strictly inside the ball so 12-digit rounding cannot push a point past r.
    const double radius = r * (1.0 - 1e-9) * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
    coords[i].resize(dim);
    for (std::size_t d = 0; d < dim; ++d) coords[i][d] = round12(anchor[d] + dir[d] / len * radius);
  }

  std::vector<std::size_t> order(params.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  GeneratedInstance out;
  std::vector<std::vector<double>> rows(params.n);
  out.cluster_of.resize(params.n);
  out.anchors.assign(k, 0);
  for (std::size_t pos = 0; pos < params.n; ++pos) {
    const std::size_t src = order[pos];
    rows[pos] = coords[src];
    out.cluster_of[pos] = label[src];
    if (is_anchor[src]) out.anchors[label[src]] = pos;
  }

  std::vector<std::vector<PointId>> members(k);
  for (PointId p = 0; p < params.n; ++p) members[out.cluster_of[p]].push_back(p);

  // CL sets: one free point from each of several distinct clusters.
  RawConstraints raw;
  std::vector<char> in_cl(params.n, 0), in_ml(params.n, 0);
  std::vector<std::vector<PointId>> free_pts = members;
  for (auto& f : free_pts) std::shuffle(f.begin(), f.end(), rng);
  const auto cl_target = static_cast<std::size_t>(std::llround(params.cl_ratio * static_cast<double>(params.n)));
  std::size_t cl_count = 0;
  while (cl_count < cl_target) {
    std::vector<std::size_t> open;
    for (std::size_t a = 0; a < k; ++a)
      if (!free_pts[a].empty()) open.push_back(a);
    std::size_t size = std::uniform_int_distribution<std::size_t>(params.cl_size_min, params.cl_size_max)(rng);
    size = std::min({size, open.size(), std::max<std::size_t>(2, cl_target - cl_count)});
    if (size < 2) break;
    std::shuffle(open.begin(), open.end(), rng);
    std::vector<PointId> set;
    for (std::size_t i = 0; i < size; ++i) {
      const PointId p = free_pts[open[i]].back();
      free_pts[open[i]].pop_back();
      in_cl[p] = 1;
      set.push_back(p);
    }
    cl_count += set.size();
    raw.cl.push_back(std::move(set));
  }

  // ML sets inside one cluster, holding at most one CL point each.
  const auto ml_target = static_cast<std::size_t>(std::llround(params.ml_ratio * static_cast<double>(params.n)));
  std::size_t ml_count = 0;
  std::size_t stalls = 0;
  while (ml_count < ml_target && stalls < 8 * k) {
    const std::size_t a = uniform_index(rng, k);
    std::vector<PointId> plain, linked;
    for (PointId p : members[a]) {
      if (in_ml[p]) continue;
      (in_cl[p] ? linked : plain).push_back(p);
    }
    std::shuffle(plain.begin(), plain.end(), rng);
    std::shuffle(linked.begin(), linked.end(), rng);
    std::size_t size = std::uniform_int_distribution<std::size_t>(params.ml_size_min, params.ml_size_max)(rng);
    std::vector<PointId> set;
    if (!linked.empty() && unit(rng) < 0.5) set.push_back(linked.front());
    for (std::size_t i = 0; set.size() < size && i < plain.size(); ++i) set.push_back(plain[i]);
    if (set.size() < 2) {
      ++stalls;
      continue;
    }
    for (PointId p : set) in_ml[p] = 1;
    ml_count += set.size();
    raw.ml.push_back(std::move(set));
  }

  // Intersected mode: re-draw a share of the CL points into extra CL sets.
  if (params.intersect_repetition > 0.0 && !raw.cl.empty()) {
    std::vector<PointId> pool;
    for (PointId p = 0; p < params.n; ++p)
      if (in_cl[p]) pool.push_back(p);
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto take = static_cast<std::size_t>(
        std::llround(params.intersect_repetition * static_cast<double>(pool.size())));
    pool.resize(std::min(pool.size(), std::max<std::size_t>(take, 2)));
    while (pool.size() >= 2) {
      const std::size_t size =
          std::uniform_int_distribution<std::size_t>(params.cl_size_min, params.cl_size_max)(rng);
      std::vector<PointId> set, rest;
      std::set<std::size_t> used;
      for (PointId p : pool) {
        if (set.size() < size && used.insert(out.cluster_of[p]).second)
          set.push_back(p);
        else
          rest.push_back(p);
      }
      if (set.size() < 2) break;
      raw.cl.push_back(std::move(set));
      pool = std::move(rest);
    }
  }

  out.instance = make_instance(Dataset(std::move(rows), params.metric), raw, params.k);

  // Optimum: the largest per-cluster discrete 1-center radius.
  const auto& ds = out.instance.data;
  double opt = 0.0;
  for (const auto& cluster : members) {
    double best = kInfinity;
    for (PointId c : cluster) {
      double worst = 0.0;
      for (PointId p : cluster) {
        worst = std::max(worst, ds.distance(p, c));
        if (worst >= best) break;
      }
      best = std::min(best, worst);
    }
    opt = std::max(opt, best);
  }
  out.instance.planted = PlantedOptimum{opt, "exact", r, std::nullopt};
  return out;
}

}  // namespace lsckc
