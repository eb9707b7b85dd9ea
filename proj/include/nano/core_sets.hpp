#pragma once

// Finite universes, bitmask subsets, subset families and partitions.
//
// Every subset is a 64-bit membership mask bound to a Universe; bit i is the
// i-th element in the universe's construction order. All types here are
// immutable values and safe to share between threads.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nano/error.hpp"

namespace nano {

using Mask = std::uint64_t;

/// Hard limit imposed by the mask representation.
inline constexpr std::size_t kMaxElements = 64;

/// Default cap for anything that scans the powerset of a universe.
inline constexpr std::size_t kDefaultMaxUniverse = 16;

class Subset;

/// Ordered roster of distinct, non-empty element labels.
///
/// A Universe is a cheap handle; copies share the same roster. Two handles
/// compare equal when their label sequences are equal.
class Universe {
 public:
  /// Throws ValidationError on an empty roster, an empty label or a duplicate
  /// label, and CapExceeded above kMaxElements elements.
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const noexcept { return data_->labels.size(); }
  std::span<const std::string> labels() const noexcept { return data_->labels; }
  const std::string& label(std::size_t index) const { return data_->labels.at(index); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Same as index_of, but an unknown label is a ValidationError.
  std::size_t index_or_throw(std::string_view label) const;

  Mask full_mask() const noexcept {
    return size() == kMaxElements ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  Subset empty_set() const;
  Subset full_set() const;
  Subset from_mask(Mask bits) const;
  Subset from_labels(std::span<const std::string> labels) const;
  Subset from_labels(std::initializer_list<std::string_view> labels) const;

  friend bool operator==(const Universe& a, const Universe& b) noexcept;

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// make_universe: validated construction from a label list.
Universe make_universe(std::vector<std::string> labels);

/// Throws UniverseMismatch unless both handles denote the same roster.
void require_same_universe(const Universe& a, const Universe& b, std::string_view context);

/// Canonical subset order: by cardinality, then lexicographically by the sorted
/// element-index sequence ({a,b} < {a,c} < {b,c}).
constexpr bool canonical_less(Mask a, Mask b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const Mask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

/// Members of a universe, by mask.
class Subset {
 public:
  /// Throws ValidationError if `bits` names positions outside the universe.
  Subset(Universe universe, Mask bits);

  const Universe& universe() const noexcept { return universe_; }
  Mask bits() const noexcept { return bits_; }

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == universe_.full_mask(); }
  bool contains(std::size_t index) const noexcept {
    return index < kMaxElements && ((bits_ >> index) & 1U) != 0;
  }
  bool contains(std::string_view label) const;

  /// Element indices in universe order.
  std::vector<std::size_t> indices() const;
  /// Element labels in universe order.
  std::vector<std::string> labels() const;

  Subset complement() const { return Subset(universe_, ~bits_ & universe_.full_mask()); }

  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  /// Set difference.
  Subset operator-(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;

  /// Throws UniverseMismatch when the operands live in different universes.
  friend bool operator==(const Subset& a, const Subset& b);

 private:
  Universe universe_;
  Mask bits_;
};

/// Orders subsets of one universe canonically (see canonical_less on masks).
struct CanonicalLess {
  bool operator()(const Subset& a, const Subset& b) const { return canonical_less(a.bits(), b.bits()); }
  bool operator()(Mask a, Mask b) const noexcept { return canonical_less(a, b); }
};

/// "{a,b}" in universe order; "{}" for the empty set.
std::string to_string(const Subset& subset);

/// A deduplicated, canonically ordered family of subsets of one universe.
class SubsetFamily {
 public:
  SubsetFamily(Universe universe, std::vector<Mask> masks);
  SubsetFamily(Universe universe, std::span<const Subset> members);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return masks_.size(); }
  std::span<const Mask> masks() const noexcept { return masks_; }

  Subset operator[](std::size_t i) const { return Subset(universe_, masks_.at(i)); }
  std::vector<Subset> members() const;

  bool contains(const Subset& subset) const;
  bool contains_mask(Mask bits) const noexcept;

  friend bool operator==(const SubsetFamily& a, const SubsetFamily& b);

 private:
  Universe universe_;
  std::vector<Mask> masks_;
};

/// "[{}, {a}, {a,b,c}]".
std::string to_string(const SubsetFamily& family);

/// Every subset of the universe, canonically ordered.
std::vector<Mask> all_masks_canonical(const Universe& universe);

/// An equivalence relation given by its classes.
class Partition {
 public:
  const Universe& universe() const noexcept { return universe_; }
  /// Blocks ordered by their smallest element index.
  std::span<const Subset> blocks() const noexcept { return blocks_; }

  const Subset& block_of(std::size_t element) const;
  const Subset& block_of(std::string_view label) const;
  std::size_t block_index(std::size_t element) const { return element_block_.at(element); }

  friend bool operator==(const Partition& a, const Partition& b);

 private:
  friend Partition make_partition(const Universe& universe, std::vector<Subset> blocks);
  Partition(Universe universe, std::vector<Subset> blocks, std::vector<std::size_t> element_block);

  Universe universe_;
  std::vector<Subset> blocks_;
  std::vector<std::size_t> element_block_;
};

/// Throws ValidationError on an empty block, overlapping blocks or blocks
/// that fail to cover the universe; UniverseMismatch on foreign blocks.
Partition make_partition(const Universe& universe, std::vector<Subset> blocks);

/// Convenience: blocks given by label lists.
Partition make_partition(const Universe& universe, const std::vector<std::vector<std::string>>& blocks);

}  // namespace nano
