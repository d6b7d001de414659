#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lsckc/instance.hpp"
#include "lsckc/metric.hpp"

namespace lsckc {

struct GenParams {
  std::size_t n = 100;
  int k = 5;
  std::size_t dim = 2;
  double r_plant = 1.0;
  double separation = 6.0;  // anchor spacing in units of r_plant, >= 4
  double cl_ratio = 0.05;   // fraction of points put into CL sets
  double ml_ratio = 0.05;   // fraction of points put into ML sets
  std::size_t cl_size_min = 2;
  std::size_t cl_size_max = 3;
  std::size_t ml_size_min = 2;
  std::size_t ml_size_max = 3;
  double intersect_repetition = 0.0;  // share of CL points re-sampled into extra CL sets
  std::uint64_t seed = 1;
  Metric metric = Metric::euclidean;
};

struct GeneratedInstance {
  Instance instance;
  std::vector<std::size_t> cluster_of;  // planted cluster per point
  std::vector<PointId> anchors;         // planted center point per cluster
};

/// Planted-cluster instance generator.
///
/// Anchors sit on a jittered integer lattice with spacing
/// (separation + 1) r_plant, so any two are at least separation * r_plant
/// apart in all three metrics. Each cluster owns its anchor point plus
/// uniformly drawn points within r_plant of it; the point order is then
/// shuffled. CL sets take one point from each of several distinct clusters,
/// ML sets stay inside one cluster (an ML set holds at most one CL point).
/// CL set sizes are drawn from [cl_size_min, cl_size_max] and capped at k.
/// With intersect_repetition > 0 a fraction of the CL points is re-drawn
/// into extra CL sets, which then overlap the originals.
///
/// With separation >= 4 a solution of radius below 2 r_plant can only serve
/// each cluster from inside itself, so the optimum is the largest per-cluster
/// discrete 1-center radius; it is recorded with "exact" provenance.
/// Coordinates are rounded to 12 significant digits. Throws InputError on
/// unusable parameters.
GeneratedInstance generate(const GenParams& params);

/// Rounds to 12 significant digits (the precision of every emitted number).
double round12(double x);

}  // namespace lsckc
