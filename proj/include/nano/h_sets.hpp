#pragma once

// Nano h-open sets: B is h-open when B is contained in nInt(B u O) for every
// open O other than {} and U. When the space has no such O, every subset is
// h-open.

#include "nano/nano_topology.hpp"

namespace nano {

/// All h-open subsets of a space. Holds the space alive, so members() stays
/// valid for the lifetime of the HFamily.
class HFamily {
 public:
  HFamily(NanoSpace space, const SubsetFamily& members) : space_(std::move(space)), members_(&members) {}

  const NanoSpace& space() const noexcept { return space_; }
  const SubsetFamily& members() const noexcept { return *members_; }
  std::size_t size() const noexcept { return members_->size(); }
  bool contains(const Subset& s) const { return members_->contains(s); }

 private:
  NanoSpace space_;
  const SubsetFamily* members_;
};

bool is_nano_h_open(const NanoSpace& space, const Subset& b);
/// Complement is h-open.
bool is_nano_h_closed(const NanoSpace& space, const Subset& b);

bool is_nano_h_open_mask(const NanoSpace& space, Mask b) noexcept;

/// Scans the powerset once and caches the result on the space.
/// Throws CapExceeded above the space's max_universe.
HFamily h_open_family(const NanoSpace& space);

/// Union of the h-open subsets of `b`.
Subset h_interior(const NanoSpace& space, const Subset& b);
/// Intersection of the h-closed supersets of `b`.
Subset h_closure(const NanoSpace& space, const Subset& b);

Mask h_interior_mask(const NanoSpace& space, Mask b);
Mask h_closure_mask(const NanoSpace& space, Mask b);

}  // namespace nano
