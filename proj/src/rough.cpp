#include "nano/rough.hpp"

namespace nano {

namespace {

struct Bounds {
  Mask lower = 0;
  Mask upper = 0;
};

Bounds bounds(const Partition& partition, const Subset& x) {
  require_same_universe(partition.universe(), x.universe(), "approximation");
  Bounds out;
  for (const auto& block : partition.blocks()) {
    const Mask b = block.bits();
    if ((b & ~x.bits()) == 0) out.lower |= b;
    if ((b & x.bits()) != 0) out.upper |= b;
  }
  return out;
}

}  // namespace

Subset lower_approximation(const Partition& partition, const Subset& x) {
  return Subset(partition.universe(), bounds(partition, x).lower);
}

Subset upper_approximation(const Partition& partition, const Subset& x) {
  return Subset(partition.universe(), bounds(partition, x).upper);
}

Subset boundary_region(const Partition& partition, const Subset& x) {
  const auto b = bounds(partition, x);
  return Subset(partition.universe(), b.upper & ~b.lower);
}

bool is_rough(const Partition& partition, const Subset& x) {
  const auto b = bounds(partition, x);
  return b.lower != b.upper;
}

ApproximationTriple approximate(const Partition& partition, const Subset& x) {
  const auto b = bounds(partition, x);
  const auto& u = partition.universe();
  return {Subset(u, b.lower), Subset(u, b.upper), Subset(u, b.upper & ~b.lower)};
}

}  // namespace nano
