#pragma once

// The nano topology generated by a partition and a target subset, with its
// closed sets and the interior/closure operators.

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>

#include "nano/core_sets.hpp"
#include "nano/rough.hpp"

namespace nano {

#ifdef NDEBUG
inline constexpr bool kAuditSpacesByDefault = false;
#else
inline constexpr bool kAuditSpacesByDefault = true;
#endif

struct SpaceOptions {
  /// Largest universe on which powerset scans (h-open family, sweeps) run.
  std::size_t max_universe = kDefaultMaxUniverse;
  /// Re-check the topology axioms on the open family after construction.
  bool audit = kAuditSpacesByDefault;
};

/// (U, tau_R(X)): a universe, an equivalence relation and a target set,
/// together with the open family {{}, U, lower, upper, boundary}.
///
/// NanoSpace is a handle; copies share state, including the h-open family
/// cache that `h_sets` fills at most once.
class NanoSpace {
 public:
  const Universe& universe() const noexcept { return state_->partition.universe(); }
  const Partition& partition() const noexcept { return state_->partition; }
  const Subset& target() const noexcept { return state_->target; }
  const ApproximationTriple& approximations() const noexcept { return state_->approximations; }

  const SubsetFamily& open_family() const noexcept { return state_->open_family; }
  const SubsetFamily& closed_family() const noexcept { return state_->closed_family; }

  bool is_open(const Subset& s) const { return state_->open_family.contains(s); }
  bool is_closed(const Subset& s) const { return state_->closed_family.contains(s); }
  bool is_clopen(const Subset& s) const { return is_open(s) && is_closed(s); }

  std::size_t max_universe() const noexcept { return state_->max_universe; }
  /// Throws CapExceeded when the universe is larger than max_universe().
  void require_within_cap(std::string_view what) const;

  bool h_family_cached() const noexcept { return state_->h_ready.load(std::memory_order_acquire); }

  /// Returns the cached h-open family, computing it with `fill` on first use.
  /// Concurrent callers race on one std::call_once; exactly one fill wins.
  template <class Fill>
  const SubsetFamily& h_family_or_fill(Fill&& fill) const {
    std::call_once(state_->h_once, [&] {
      state_->h_family.emplace(fill());
      state_->h_ready.store(true, std::memory_order_release);
    });
    return *state_->h_family;
  }

  /// Same universe labels, same partition, same target.
  friend bool operator==(const NanoSpace& a, const NanoSpace& b);

 private:
  friend NanoSpace build_nano_space(const Partition& partition, const Subset& x, SpaceOptions options);

  struct State {
    State(Partition p, Subset x, ApproximationTriple t, SubsetFamily open, SubsetFamily closed, std::size_t cap)
        : partition(std::move(p)),
          target(std::move(x)),
          approximations(std::move(t)),
          open_family(std::move(open)),
          closed_family(std::move(closed)),
          max_universe(cap) {}

    Partition partition;
    Subset target;
    ApproximationTriple approximations;
    SubsetFamily open_family;
    SubsetFamily closed_family;
    std::size_t max_universe;

    std::once_flag h_once;
    std::atomic<bool> h_ready{false};
    std::optional<SubsetFamily> h_family;
  };

  explicit NanoSpace(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

/// Throws UniverseMismatch if `x` is not a subset of the partition's universe.
NanoSpace build_nano_space(const Partition& partition, const Subset& x, SpaceOptions options = {});

/// Complements of the open sets, canonically ordered.
SubsetFamily nano_closed_sets(const NanoSpace& space);

/// Largest open set contained in `b`.
Subset n_interior(const NanoSpace& space, const Subset& b);
/// Smallest closed set containing `b`.
Subset n_closure(const NanoSpace& space, const Subset& b);

/// Mask-level interior for hot loops; `b` must already be a valid mask.
Mask n_interior_mask(const NanoSpace& space, Mask b) noexcept;
Mask n_closure_mask(const NanoSpace& space, Mask b) noexcept;

/// Contains {} and U and is closed under pairwise union and intersection.
bool satisfies_topology_axioms(const SubsetFamily& family);

}  // namespace nano
