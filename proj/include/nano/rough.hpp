#pragma once

// Rough-set approximations of a subset with respect to a partition.

#include "nano/core_sets.hpp"

namespace nano {

struct ApproximationTriple {
  Subset lower;
  Subset upper;
  Subset boundary;
};

/// Union of the blocks contained in `x`.
Subset lower_approximation(const Partition& partition, const Subset& x);
/// Union of the blocks that meet `x`.
Subset upper_approximation(const Partition& partition, const Subset& x);
/// upper \ lower.
Subset boundary_region(const Partition& partition, const Subset& x);
/// True when the lower and upper approximations differ.
bool is_rough(const Partition& partition, const Subset& x);

ApproximationTriple approximate(const Partition& partition, const Subset& x);

}  // namespace nano
