#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "lsckc/baselines.hpp"
#include "lsckc/driver.hpp"

using namespace lsckc;

namespace {
Instance line_instance(std::vector<double> xs, RawConstraints raw, int k) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) rows.push_back({x});
  return make_instance(Dataset(std::move(rows), Metric::euclidean), raw, k);
}

std::size_t probe_bound(const Dataset& ds) {
  const auto m = candidate_radii(ds).size();
  return static_cast<std::size_t>(std::ceil(std::log2(std::max<std::size_t>(m, 1)))) + 2;
}
}  // namespace

TEST_CASE("search radii") {
  const auto ds = line_instance({0, 1, 3}, {}, 1).data;
  CHECK(search_radii(ds) == std::vector<double>{0, 1, 2, 3});
}

TEST_CASE("solve on three unit pairs") {
  const auto inst = line_instance({0, 1, 10, 11, 20, 21}, {}, 3);
  for (auto strategy : {SearchStrategy::binary, SearchStrategy::linear}) {
    const auto sol = solve(inst, strategy);
    CHECK(sol.guarantee == Guarantee::two_approx);
    CHECK(sol.centers.size() <= 3);
    CHECK(sol.radius <= 2.0);
    CHECK(sol.violations.empty());
    CHECK(sol.assignment.size() == 6);
  }
}

TEST_CASE("k at least n gives radius zero") {
  const auto inst = line_instance({0, 4, 9}, {{{0, 1}}, {}}, 5);
  const auto sol = solve(inst);
  CHECK(sol.radius == 0.0);
  CHECK(sol.probed_eta == 0.0);
}

TEST_CASE("oversized CL set is reported infeasible") {
  const auto inst = line_instance({0, 1, 2, 3}, {{{0, 1, 2}}, {}}, 2);
  const auto sol = solve(inst);
  CHECK(sol.guarantee == Guarantee::infeasible);
  REQUIRE_FALSE(sol.errors.empty());
  CHECK(sol.errors[0].find("CL set exceeds k") != std::string::npos);
  CHECK(sol.assignment.empty());
}

TEST_CASE("intersected CL sets are best effort") {
  const auto inst = line_instance({0, 1, 2, 10, 11}, {{{0, 1}, {1, 2}}, {}}, 3);
  const auto sol = solve(inst);
  CHECK(sol.guarantee == Guarantee::best_effort);
  CHECK(sol.violations.empty());
}

TEST_CASE("binary search stays within the probe bound and matches the 2x bound") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 150; ++t) {
    const auto inst = testing::random_small_instance(rng);
    const auto exact = exact_opt(inst);
    if (!exact.feasible) continue;
    const auto bin = solve(inst, SearchStrategy::binary);
    const auto lin = solve(inst, SearchStrategy::linear);
    CHECK(bin.probe_count <= probe_bound(inst.data));
    CHECK(bin.radius <= 2 * exact.radius + 1e-9);
    CHECK(lin.radius <= 2 * exact.radius + 1e-9);
    CHECK(bin.violations.empty());
    CHECK(static_cast<int>(bin.centers.size()) <= inst.k);
    // The probed eta is twice a searched radius, never above 2 r*.
    CHECK(bin.probed_eta <= 2 * exact.radius + 1e-12);
    CHECK(lin.probed_eta <= bin.probed_eta + 1e-12);
  }
}
