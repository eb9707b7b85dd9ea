#include "nano/nano_topology.hpp"

#include <stdexcept>

namespace nano {

void NanoSpace::require_within_cap(std::string_view what) const {
  if (universe().size() > state_->max_universe) {
    throw CapExceeded(std::string(what) + ": universe has " + std::to_string(universe().size()) +
                      " elements, cap is " + std::to_string(state_->max_universe));
  }
}

bool operator==(const NanoSpace& a, const NanoSpace& b) {
  if (a.state_ == b.state_) return true;
  return a.partition() == b.partition() && a.target().bits() == b.target().bits();
}

NanoSpace build_nano_space(const Partition& partition, const Subset& x, SpaceOptions options) {
  const Universe& u = partition.universe();
  require_same_universe(u, x.universe(), "nano space");
  auto triple = approximate(partition, x);
  SubsetFamily open(u, std::vector<Mask>{0, u.full_mask(), triple.lower.bits(), triple.upper.bits(),
                                         triple.boundary.bits()});
  std::vector<Mask> closed_masks;
  closed_masks.reserve(open.size());
  for (Mask m : open.masks()) closed_masks.push_back(~m & u.full_mask());
  SubsetFamily closed(u, std::move(closed_masks));

  if (options.audit && !satisfies_topology_axioms(open)) {
    throw std::logic_error("generated family " + to_string(open) + " is not a topology");
  }
  return NanoSpace(std::make_shared<NanoSpace::State>(partition, x, std::move(triple), std::move(open),
                                                      std::move(closed), options.max_universe));
}

SubsetFamily nano_closed_sets(const NanoSpace& space) { return space.closed_family(); }

Mask n_interior_mask(const NanoSpace& space, Mask b) noexcept {
  Mask out = 0;
  for (Mask o : space.open_family().masks()) {
    if ((o & ~b) == 0) out |= o;
  }
  return out;
}

Mask n_closure_mask(const NanoSpace& space, Mask b) noexcept {
  Mask out = space.universe().full_mask();
  for (Mask k : space.closed_family().masks()) {
    if ((b & ~k) == 0) out &= k;
  }
  return out;
}

Subset n_interior(const NanoSpace& space, const Subset& b) {
  require_same_universe(space.universe(), b.universe(), "nano interior");
  return Subset(space.universe(), n_interior_mask(space, b.bits()));
}

Subset n_closure(const NanoSpace& space, const Subset& b) {
  require_same_universe(space.universe(), b.universe(), "nano closure");
  return Subset(space.universe(), n_closure_mask(space, b.bits()));
}

bool satisfies_topology_axioms(const SubsetFamily& family) {
  if (!family.contains_mask(0) || !family.contains_mask(family.universe().full_mask())) return false;
  for (Mask a : family.masks()) {
    for (Mask b : family.masks()) {
      if (!family.contains_mask(a | b) || !family.contains_mask(a & b)) return false;
    }
  }
  return true;
}

}  // namespace nano
