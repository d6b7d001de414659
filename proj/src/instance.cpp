#include "lsckc/instance.hpp"

#include "lsckc/errors.hpp"

namespace lsckc {

Instance make_instance(Dataset data, const RawConstraints& raw, int k) {
  Instance inst;
  inst.data = std::move(data);
  inst.constraints = normalize(raw);
  inst.k = k;
  return inst;
}

std::vector<std::string> validate(const Instance& instance) {
  auto errors = validate(instance.constraints, instance.k, instance.data.size());
  if (instance.data.size() == 0) errors.insert(errors.begin(), "instance has no points");
  return errors;
}

void require_valid(const Instance& instance) {
  auto errors = validate(instance);
  if (!errors.empty()) throw ValidationError(std::move(errors));
}

}  // namespace lsckc
