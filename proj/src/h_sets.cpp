#include "nano/h_sets.hpp"

namespace nano {

bool is_nano_h_open_mask(const NanoSpace& space, Mask b) noexcept {
  const Mask full = space.universe().full_mask();
  for (Mask o : space.open_family().masks()) {
    if (o == 0 || o == full) continue;
    if ((b & ~n_interior_mask(space, b | o)) != 0) return false;
  }
  return true;
}

bool is_nano_h_open(const NanoSpace& space, const Subset& b) {
  require_same_universe(space.universe(), b.universe(), "h-open test");
  return is_nano_h_open_mask(space, b.bits());
}

bool is_nano_h_closed(const NanoSpace& space, const Subset& b) {
  require_same_universe(space.universe(), b.universe(), "h-closed test");
  return is_nano_h_open_mask(space, ~b.bits() & space.universe().full_mask());
}

HFamily h_open_family(const NanoSpace& space) {
  space.require_within_cap("h-open family");
  const auto& members = space.h_family_or_fill([&] {
    const Mask count = Mask{1} << space.universe().size();
    std::vector<Mask> found;
    for (Mask m = 0; m < count; ++m) {
      if (is_nano_h_open_mask(space, m)) found.push_back(m);
    }
    return SubsetFamily(space.universe(), std::move(found));
  });
  return HFamily(space, members);
}

Mask h_interior_mask(const NanoSpace& space, Mask b) {
  space.require_within_cap("h-interior");
  Mask out = 0;
  if (space.h_family_cached()) {
    for (Mask c : h_open_family(space).members().masks()) {
      if ((c & ~b) == 0) out |= c;
    }
    return out;
  }
  // Walk the submasks of b, b itself included.
  for (Mask c = b;; c = (c - 1) & b) {
    if ((c & ~out) != 0 && is_nano_h_open_mask(space, c)) out |= c;
    if (c == 0) break;
  }
  return out;
}

Mask h_closure_mask(const NanoSpace& space, Mask b) {
  space.require_within_cap("h-closure");
  const Mask full = space.universe().full_mask();
  Mask out = full;
  if (space.h_family_cached()) {
    for (Mask c : h_open_family(space).members().masks()) {
      const Mask closed = ~c & full;
      if ((b & ~closed) == 0) out &= closed;
    }
    return out;
  }
  // h-closed supersets of b are complements of h-open subsets of ~b.
  const Mask rest = ~b & full;
  for (Mask c = rest;; c = (c - 1) & rest) {
    if (is_nano_h_open_mask(space, c)) out &= ~c & full;
    if (c == 0) break;
  }
  return out;
}

Subset h_interior(const NanoSpace& space, const Subset& b) {
  require_same_universe(space.universe(), b.universe(), "h-interior");
  return Subset(space.universe(), h_interior_mask(space, b.bits()));
}

Subset h_closure(const NanoSpace& space, const Subset& b) {
  require_same_universe(space.universe(), b.universe(), "h-closure");
  return Subset(space.universe(), h_closure_mask(space, b.bits()));
}

}  // namespace nano
