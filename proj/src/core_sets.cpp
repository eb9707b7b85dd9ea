#include "nano/core_sets.hpp"

#include <algorithm>
#include <unordered_map>

namespace nano {

Universe::Universe(std::vector<std::string> labels) {
  if (labels.empty()) throw ValidationError("universe must contain at least one element");
  if (labels.size() > kMaxElements) {
    throw CapExceeded("universe has " + std::to_string(labels.size()) + " elements; at most " +
                      std::to_string(kMaxElements) + " are supported");
  }
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ValidationError("universe labels must be non-empty");
    if (!data->index.emplace(labels[i], i).second) {
      throw ValidationError("duplicate universe label '" + labels[i] + "'");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Universe make_universe(std::vector<std::string> labels) { return Universe(std::move(labels)); }

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_or_throw(std::string_view label) const {
  if (auto index = index_of(label)) return *index;
  throw ValidationError("unknown element '" + std::string(label) + "'");
}

Subset Universe::empty_set() const { return Subset(*this, 0); }
Subset Universe::full_set() const { return Subset(*this, full_mask()); }
Subset Universe::from_mask(Mask bits) const { return Subset(*this, bits); }

Subset Universe::from_labels(std::span<const std::string> labels) const {
  Mask bits = 0;
  for (const auto& label : labels) bits |= Mask{1} << index_or_throw(label);
  return Subset(*this, bits);
}

Subset Universe::from_labels(std::initializer_list<std::string_view> labels) const {
  Mask bits = 0;
  for (auto label : labels) bits |= Mask{1} << index_or_throw(label);
  return Subset(*this, bits);
}

bool operator==(const Universe& a, const Universe& b) noexcept {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

void require_same_universe(const Universe& a, const Universe& b, std::string_view context) {
  if (!(a == b)) throw UniverseMismatch(std::string(context) + ": operands belong to different universes");
}

Subset::Subset(Universe universe, Mask bits) : universe_(std::move(universe)), bits_(bits) {
  if ((bits_ & ~universe_.full_mask()) != 0) throw ValidationError("subset names elements outside its universe");
}

bool Subset::contains(std::string_view label) const {
  auto index = universe_.index_of(label);
  return index && contains(*index);
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (auto i : indices()) out.push_back(universe_.label(i));
  return out;
}

Subset Subset::operator|(const Subset& other) const {
  require_same_universe(universe_, other.universe_, "union");
  return Subset(universe_, bits_ | other.bits_);
}

Subset Subset::operator&(const Subset& other) const {
  require_same_universe(universe_, other.universe_, "intersection");
  return Subset(universe_, bits_ & other.bits_);
}

Subset Subset::operator-(const Subset& other) const {
  require_same_universe(universe_, other.universe_, "difference");
  return Subset(universe_, bits_ & ~other.bits_);
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_universe(universe_, other.universe_, "inclusion");
  return (bits_ & ~other.bits_) == 0;
}

bool operator==(const Subset& a, const Subset& b) {
  require_same_universe(a.universe_, b.universe_, "equality");
  return a.bits_ == b.bits_;
}

std::string to_string(const Subset& subset) {
  std::string out = "{";
  bool first = true;
  for (auto i : subset.indices()) {
    if (!first) out += ',';
    out += subset.universe().label(i);
    first = false;
  }
  out += '}';
  return out;
}

SubsetFamily::SubsetFamily(Universe universe, std::vector<Mask> masks)
    : universe_(std::move(universe)), masks_(std::move(masks)) {
  const Mask full = universe_.full_mask();
  for (Mask m : masks_) {
    if ((m & ~full) != 0) throw ValidationError("family member names elements outside its universe");
  }
  std::sort(masks_.begin(), masks_.end(), CanonicalLess{});
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

namespace {

std::vector<Mask> masks_of(const Universe& universe, std::span<const Subset> members) {
  std::vector<Mask> out;
  out.reserve(members.size());
  for (const auto& s : members) {
    require_same_universe(universe, s.universe(), "family");
    out.push_back(s.bits());
  }
  return out;
}

}  // namespace

SubsetFamily::SubsetFamily(Universe universe, std::span<const Subset> members)
    : SubsetFamily(universe, masks_of(universe, members)) {}

std::vector<Subset> SubsetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(masks_.size());
  for (Mask m : masks_) out.emplace_back(universe_, m);
  return out;
}

bool SubsetFamily::contains(const Subset& subset) const {
  require_same_universe(universe_, subset.universe(), "family membership");
  return contains_mask(subset.bits());
}

bool SubsetFamily::contains_mask(Mask bits) const noexcept {
  return std::binary_search(masks_.begin(), masks_.end(), bits, CanonicalLess{});
}

bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
  require_same_universe(a.universe_, b.universe_, "family equality");
  return a.masks_ == b.masks_;
}

std::string to_string(const SubsetFamily& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(family[i]);
  }
  out += ']';
  return out;
}

std::vector<Mask> all_masks_canonical(const Universe& universe) {
  if (universe.size() >= kMaxElements) throw CapExceeded("powerset of a 64-element universe is not enumerable");
  std::vector<Mask> out(std::size_t{1} << universe.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = m;
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

Partition::Partition(Universe universe, std::vector<Subset> blocks, std::vector<std::size_t> element_block)
    : universe_(std::move(universe)), blocks_(std::move(blocks)), element_block_(std::move(element_block)) {}

const Subset& Partition::block_of(std::size_t element) const {
  if (element >= element_block_.size()) throw ValidationError("element index out of range");
  return blocks_[element_block_[element]];
}

const Subset& Partition::block_of(std::string_view label) const {
  return block_of(universe_.index_or_throw(label));
}

bool operator==(const Partition& a, const Partition& b) {
  if (!(a.universe_ == b.universe_)) return false;
  if (a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    if (a.blocks_[i].bits() != b.blocks_[i].bits()) return false;
  }
  return true;
}

Partition make_partition(const Universe& universe, std::vector<Subset> blocks) {
  Mask seen = 0;
  for (const auto& block : blocks) {
    require_same_universe(universe, block.universe(), "partition");
    if (block.empty()) throw ValidationError("partition contains an empty block");
    if ((seen & block.bits()) != 0) {
      throw ValidationError("partition blocks overlap on " + to_string(Subset(universe, seen & block.bits())));
    }
    seen |= block.bits();
  }
  if (seen != universe.full_mask()) {
    throw ValidationError("partition does not cover " + to_string(Subset(universe, universe.full_mask() & ~seen)));
  }
  std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  std::vector<std::size_t> element_block(universe.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto i : blocks[b].indices()) element_block[i] = b;
  }
  return Partition(universe, std::move(blocks), std::move(element_block));
}

Partition make_partition(const Universe& universe, const std::vector<std::vector<std::string>>& blocks) {
  std::vector<Subset> subsets;
  subsets.reserve(blocks.size());
  for (const auto& labels : blocks) {
    Mask bits = 0;
    for (const auto& label : labels) {
      const Mask bit = Mask{1} << universe.index_or_throw(label);
      if ((bits & bit) != 0) throw ValidationError("label '" + label + "' repeated within a block");
      bits |= bit;
    }
    subsets.emplace_back(universe, bits);
  }
  return make_partition(universe, std::move(subsets));
}

}  // namespace nano
