#pragma once

#include <vector>

#include "nano/verify.hpp"
#include "oracle.hpp"

namespace support {

inline nano::NanoSpace to_space(const oracle::Space& s, const std::vector<std::string>& labels) {
  const nano::Universe u(labels);
  std::vector<nano::Subset> blocks;
  for (const auto& b : s.blocks) blocks.emplace_back(u, oracle::to_bits(b));
  return nano::build_nano_space(nano::make_partition(u, std::move(blocks)), nano::Subset(u, oracle::to_bits(s.x)));
}

inline nano::NanoSpace to_space(const oracle::Space& s) { return to_space(s, nano::letter_labels(s.n)); }

inline oracle::Family to_family(const nano::SubsetFamily& f) {
  oracle::Family out;
  for (auto m : f.masks()) out.insert(oracle::from_bits(m));
  return out;
}

inline nano::NanoSpace space(std::vector<std::string> labels, std::vector<std::vector<std::string>> blocks,
                             std::vector<std::string> x) {
  const nano::Universe u(std::move(labels));
  return nano::build_nano_space(nano::make_partition(u, blocks), u.from_labels(x));
}

}  // namespace support
