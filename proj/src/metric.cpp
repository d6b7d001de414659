#include "lsckc/metric.hpp"

#include <algorithm>
#include <cmath>

#include "lsckc/errors.hpp"

namespace lsckc {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::euclidean:
      return "euclidean";
    case Metric::manhattan:
      return "manhattan";
    case Metric::chebyshev:
      return "chebyshev";
  }
  return "euclidean";
}

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "euclidean" || name == "l2") return Metric::euclidean;
  if (name == "manhattan" || name == "l1") return Metric::manhattan;
  if (name == "chebyshev" || name == "linf") return Metric::chebyshev;
  return std::nullopt;
}

double metric_distance(std::span<const double> a, std::span<const double> b, Metric m) {
  double acc = 0.0;
  switch (m) {
    case Metric::euclidean:
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
      }
      return std::sqrt(acc);
    case Metric::manhattan:
      for (std::size_t i = 0; i < a.size(); ++i) acc += std::fabs(a[i] - b[i]);
      return acc;
    case Metric::chebyshev:
      for (std::size_t i = 0; i < a.size(); ++i) acc = std::max(acc, std::fabs(a[i] - b[i]));
      return acc;
  }
  return acc;
}

Dataset::Dataset(std::vector<std::vector<double>> rows, Metric metric) : metric_(metric) {
  points_.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw InputError("point " + std::to_string(i) + " has no coordinates");
    if (i == 0) dim_ = rows[i].size();
    if (rows[i].size() != dim_)
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(rows[i].size()) + ", expected " + std::to_string(dim_));
    for (double x : rows[i])
      if (!std::isfinite(x)) throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    points_.push_back(Point{i, std::move(rows[i])});
  }

  const std::size_t n = points_.size();
  if (n > 0 && n <= kCacheLimit) {
    cache_.assign(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const double d = compute(a, b);
        cache_[a * n + b] = d;
        cache_[b * n + a] = d;
      }
    }
  }
}

const Point& Dataset::point(PointId id) const {
  if (id >= points_.size()) throw InputError("id out of range: " + std::to_string(id));
  return points_[id];
}

double Dataset::compute(PointId a, PointId b) const {
  return metric_distance(point(a).coords, point(b).coords, metric_);
}

double Dataset::distance(PointId a, PointId b) const {
  const std::size_t n = points_.size();
  if (a >= n || b >= n)
    throw InputError("id out of range: " + std::to_string(a >= n ? a : b));
  if (!cache_.empty()) return cache_[a * n + b];
  return a == b ? 0.0 : compute(a, b);
}

double dist_to_set(PointId p, std::span<const PointId> centers, const Dataset& ds) {
  if (p >= ds.size()) throw InputError("id out of range: " + std::to_string(p));
  double best = kInfinity;
  for (PointId c : centers) best = std::min(best, ds.distance(p, c));
  return best;
}

std::vector<double> candidate_radii(const Dataset& ds) {
  const std::size_t n = ds.size();
  std::vector<double> radii;
  radii.reserve(n < 2 ? 0 : n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) radii.push_back(ds.distance(a, b));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

CenterSet make_center_set(std::vector<PointId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace lsckc
