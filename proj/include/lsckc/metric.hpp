#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsckc {

using PointId = std::size_t;
/// Sorted, duplicate-free list of point ids.
using CenterSet = std::vector<PointId>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Absolute slack applied to every `distance <= threshold` test.
inline constexpr double kThresholdTolerance = 1e-12;

inline bool within(double distance, double threshold) noexcept {
  return distance <= threshold + kThresholdTolerance;
}

enum class Metric { euclidean, manhattan, chebyshev };

std::string_view to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

struct Point {
  PointId id = 0;
  std::vector<double> coords;
};

/// Immutable point set with a metric. Pairwise distances are cached eagerly
/// up to `kCacheLimit` points and computed on demand above that.
class Dataset {
 public:
  static constexpr std::size_t kCacheLimit = 20000;

  Dataset() = default;
  /// Each row is one point; ids are assigned by position.
  Dataset(std::vector<std::vector<double>> rows, Metric metric);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  Metric metric() const noexcept { return metric_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& point(PointId id) const;
  bool has_cache() const noexcept { return !cache_.empty(); }

  /// Throws InputError on out-of-range ids.
  double distance(PointId a, PointId b) const;
  /// Uncached evaluation of the metric on raw coordinates.
  double compute(PointId a, PointId b) const;

 private:
  std::vector<Point> points_;
  std::size_t dim_ = 0;
  Metric metric_ = Metric::euclidean;
  std::vector<double> cache_;  // row-major n x n
};

double metric_distance(std::span<const double> a, std::span<const double> b, Metric m);

inline double distance(PointId a, PointId b, const Dataset& ds) { return ds.distance(a, b); }

/// min over `centers` of d(p, c); +inf for an empty set.
double dist_to_set(PointId p, std::span<const PointId> centers, const Dataset& ds);

/// Sorted distinct pairwise distances (includes 0 only if two points coincide).
std::vector<double> candidate_radii(const Dataset& ds);

/// Normalizes an arbitrary id list into a CenterSet.
CenterSet make_center_set(std::vector<PointId> ids);

}  // namespace lsckc
