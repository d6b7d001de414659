#include <doctest.h>

#include <functional>
#include <random>
#include <stdexcept>

#include "../support/oracles.hpp"
#include "lsckc/assignment.hpp"
#include "lsckc/errors.hpp"

using namespace lsckc;

namespace {
Instance line_instance(std::vector<double> xs, RawConstraints raw, int k) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) rows.push_back({x});
  return make_instance(Dataset(std::move(rows), Metric::euclidean), raw, k);
}

// Any map of points to centers within eta respecting all constraints?
bool brute_force_assignable(const CenterSet& centers, const Instance& inst, double eta) {
  const std::size_t n = inst.data.size();
  std::vector<PointId> of(n);
  std::function<bool(std::size_t)> go = [&](std::size_t p) -> bool {
    if (p == n) {
      Assignment a{of, 0.0, {}};
      return verify(a, inst.constraints).empty();
    }
    for (PointId c : centers) {
      if (inst.data.distance(p, c) > eta + kThresholdTolerance) continue;
      of[p] = c;
      if (go(p + 1)) return true;
    }
    return false;
  };
  return go(0);
}
}  // namespace

TEST_CASE("CL member served by the matching") {
  // CL {x at 0, y at 10.2}, centers x and w at 10.3.
  const auto inst = line_instance({0, 10.2, 10.3}, {{{0, 1}}, {}}, 2);
  const auto a = find_assignment(std::vector<PointId>{0, 2}, inst, 1.0);
  REQUIRE(a);
  CHECK(a->center_of == std::vector<PointId>{0, 2, 2});
  CHECK(a->radius == doctest::Approx(0.1));
  CHECK(a->violations.empty());
}

TEST_CASE("ML set follows the center minimizing its max distance") {
  const auto inst = line_instance({0, 3, 1, 8}, {{}, {{0, 1}}}, 2);
  const auto a = find_assignment(std::vector<PointId>{2, 3}, inst, 2.0);
  REQUIRE(a);
  CHECK(a->center_of[0] == 2);
  CHECK(a->center_of[1] == 2);
  CHECK(a->radius == 2.0);
  CHECK_FALSE(find_assignment(std::vector<PointId>{2, 3}, inst, 1.5));
}

TEST_CASE("verify counts pairwise violations") {
  const auto sys = normalize({{{0, 1, 2}}, {{3, 4, 5}}});
  Assignment a;
  a.center_of = {0, 0, 2, 3, 3, 5};
  const auto v = verify(a, sys);
  std::size_t cl = 0, ml = 0;
  for (const auto& x : v) (x.kind == Violation::Kind::cannot_link ? cl : ml)++;
  CHECK(cl == 1);
  CHECK(ml == 2);
  a.center_of = {0, 1, 2, 3, 3, 3};
  CHECK(verify(a, sys).empty());
}

TEST_CASE("assign requires a feasible center set") {
  const auto inst = line_instance({0, 1, 2}, {{{0, 1}}, {}}, 2);
  CHECK_THROWS_AS(assign(std::vector<PointId>{2}, inst, 5.0), std::logic_error);
  const auto a = assign(std::vector<PointId>{0, 1}, inst, 1.0);
  CHECK(a.violations.empty());
}

TEST_CASE("nearest assignment and cost") {
  const auto inst = line_instance({0, 1, 10, 12}, {}, 2);
  const auto a = nearest_assignment(std::vector<PointId>{0, 2}, inst);
  CHECK(a.center_of == std::vector<PointId>{0, 0, 2, 2});
  CHECK(a.radius == 2.0);
  CHECK(clustering_cost(a, inst.data) == 2.0);
  CHECK(nearest_center_radius(std::vector<PointId>{0, 2}, inst.data) == 2.0);
  Assignment partial;
  partial.center_of = {0, 0, 2, 99};
  CHECK_THROWS_AS(clustering_cost(partial, inst.data), InputError);
}

TEST_CASE("find_assignment is exact on overlapping constraints") {
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<int> coord(0, 12);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 8)(rng);
    std::vector<double> xs(n);
    for (auto& x : xs) x = coord(rng);
    RawConstraints raw;
    std::uniform_int_distribution<PointId> id(0, n - 1);
    const int n_cl = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int s = 0; s < n_cl; ++s) raw.cl.push_back({id(rng), id(rng), id(rng)});
    if (std::bernoulli_distribution(0.5)(rng)) raw.ml.push_back({id(rng), id(rng)});
    Instance inst;
    try {
      inst = line_instance(xs, raw, 3);
    } catch (const std::exception&) {
      continue;
    }
    std::vector<PointId> pick;
    for (PointId p = 0; p < n; ++p)
      if (std::bernoulli_distribution(0.45)(rng)) pick.push_back(p);
    const CenterSet centers = make_center_set(pick);
    if (centers.empty()) continue;
    const double eta = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto got = find_assignment(centers, inst, eta, 0);
    CHECK(got.has_value() == brute_force_assignable(centers, inst, eta));
    if (got) {
      ++feasible;
      CHECK(verify(*got, inst.constraints).empty());
      CHECK(got->radius <= eta + kThresholdTolerance);
      for (PointId c : got->center_of) CHECK(std::binary_search(centers.begin(), centers.end(), c));
    }
  }
  CHECK(feasible > 20);
}
