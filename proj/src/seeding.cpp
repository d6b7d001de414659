#include "lsckc/seeding.hpp"

#include <limits>
#include <vector>

#include "lsckc/errors.hpp"

namespace lsckc {

CenterSet seed_centers(const Dataset& ds, std::span<const MLSet> ml, double eta,
                       std::span<const PointId> initial) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> ml_index(ds.size(), kNone);
  for (std::size_t i = 0; i < ml.size(); ++i)
    for (PointId x : ml[i]) {
      if (x >= ds.size()) throw InputError("id out of range: " + std::to_string(x));
      ml_index[x] = i;
    }

  std::vector<PointId> centers(initial.begin(), initial.end());
  std::vector<char> is_center(ds.size(), 0);
  for (PointId c : centers) is_center.at(c) = 1;

  for (PointId p = 0; p < ds.size(); ++p) {
    if (is_center[p]) continue;
    bool add = false;
    if (ml_index[p] == kNone) {
      add = !within(dist_to_set(p, centers, ds), eta);
    } else {
      add = !within(ml_set_distance(ml[ml_index[p]], centers, ds), eta);
    }
    if (add) {
      centers.push_back(p);
      is_center[p] = 1;
    }
  }
  return make_center_set(std::move(centers));
}

CLSet largest_cl_set(std::span<const CLSet> cl) {
  const CLSet* best = nullptr;
  for (const auto& y : cl)
    if (!best || y.size() > best->size()) best = &y;
  return best ? *best : CLSet{};
}

}  // namespace lsckc
