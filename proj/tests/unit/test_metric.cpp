#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "lsckc/errors.hpp"
#include "lsckc/metric.hpp"

using namespace lsckc;

namespace {
Dataset line(std::vector<double> xs, Metric m = Metric::euclidean) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) rows.push_back({x});
  return Dataset(std::move(rows), m);
}
}  // namespace

TEST_CASE("distance examples") {
  CHECK(distance(0, 1, line({0, 0})) == 0.0);
  const Dataset plane({{0, 0}, {3, 4}}, Metric::euclidean);
  CHECK(distance(0, 1, plane) == 5.0);
  const Dataset taxi({{0, 0}, {3, 4}}, Metric::manhattan);
  CHECK(distance(0, 1, taxi) == 7.0);
  const Dataset cheb({{0, 0}, {3, 4}}, Metric::chebyshev);
  CHECK(distance(0, 1, cheb) == 4.0);
  CHECK(distance(1, 0, plane) == distance(0, 1, plane));
}

TEST_CASE("distance rejects out-of-range ids") {
  const auto ds = line({0, 1});
  CHECK_THROWS_AS(ds.distance(0, 2), InputError);
  CHECK_THROWS_AS(dist_to_set(5, std::vector<PointId>{0}, ds), InputError);
}

TEST_CASE("ragged rows are rejected") {
  CHECK_THROWS_AS(Dataset({{0, 0}, {1}}, Metric::euclidean), InputError);
  CHECK_THROWS_AS(Dataset({{}}, Metric::euclidean), InputError);
}

TEST_CASE("dist_to_set") {
  const auto ds = line({5, 0, 4, 9});
  CHECK(dist_to_set(0, {}, ds) == kInfinity);
  CHECK(dist_to_set(0, std::vector<PointId>{1, 2, 3}, ds) == 1.0);
  CHECK(dist_to_set(2, std::vector<PointId>{1, 2, 3}, ds) == 0.0);
}

TEST_CASE("candidate radii") {
  CHECK(candidate_radii(line({0, 1, 3})) == std::vector<double>{1, 2, 3});
  CHECK(candidate_radii(line({7})).empty());

  // Enumerate pairs directly and dedupe through a std::set.
  const auto ds = line({0, 1, 1});
  std::set<double> expected;
  for (PointId a = 0; a < 3; ++a)
    for (PointId b = a + 1; b < 3; ++b) expected.insert(std::fabs(ds.point(a).coords[0] - ds.point(b).coords[0]));
  const auto got = candidate_radii(ds);
  CHECK(got == std::vector<double>(expected.begin(), expected.end()));
  CHECK(got == std::vector<double>{0, 1});
}

TEST_CASE("candidate radii are strictly increasing and bounded") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> rows(9, std::vector<double>(2));
    for (auto& r : rows)
      for (auto& x : r) x = coord(rng);
    const Dataset ds(rows, Metric::manhattan);
    const auto radii = candidate_radii(ds);
    CHECK(radii.size() <= 9 * 8 / 2 + 1);
    for (std::size_t i = 1; i < radii.size(); ++i) CHECK(radii[i - 1] < radii[i]);
  }
}

TEST_CASE("triangle inequality holds for all metrics") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (Metric m : {Metric::euclidean, Metric::manhattan, Metric::chebyshev}) {
    std::vector<std::vector<double>> rows(300, std::vector<double>(3));
    for (auto& r : rows)
      for (auto& x : r) x = u(rng);
    const Dataset ds(rows, m);
    std::uniform_int_distribution<PointId> pick(0, ds.size() - 1);
    int bad = 0;
    for (int t = 0; t < 10000; ++t) {
      const PointId a = pick(rng), b = pick(rng), c = pick(rng);
      if (ds.distance(a, c) > ds.distance(a, b) + ds.distance(b, c) + 1e-9) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("cached distances match recomputation bit for bit") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> rows(40, std::vector<double>(4));
  for (auto& r : rows)
    for (auto& x : r) x = u(rng);
  const Dataset ds(rows, Metric::euclidean);
  REQUIRE(ds.has_cache());
  for (PointId a = 0; a < ds.size(); ++a)
    for (PointId b = 0; b < ds.size(); ++b) {
      CHECK(ds.distance(a, b) == ds.distance(b, a));
      if (a != b) CHECK(ds.distance(a, b) == ds.compute(a, b));
    }
}

TEST_CASE("coincident points are distinct ids at distance zero") {
  const auto ds = line({2, 2, 5});
  CHECK(ds.size() == 3);
  CHECK(ds.distance(0, 1) == 0.0);
  CHECK(dist_to_set(1, std::vector<PointId>{0}, ds) == 0.0);
}

TEST_CASE("metric names") {
  CHECK(parse_metric("manhattan") == Metric::manhattan);
  CHECK(parse_metric("linf") == Metric::chebyshev);
  CHECK_FALSE(parse_metric("cosine").has_value());
  CHECK(to_string(Metric::euclidean) == "euclidean");
}
