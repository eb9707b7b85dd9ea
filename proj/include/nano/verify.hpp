#pragma once

// Exhaustive verification over small instances: every space on a universe of
// size n, every map between two such spaces, the theorem battery run over
// them, the example fixtures, and a counterexample miner for implications
// between map classes.

#include <array>
#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nano/files.hpp"
#include "nano/maps.hpp"

namespace nano {

/// A failed check, with enough data to rebuild the instance.
struct Failure {
  std::string detail;
  std::optional<SpaceFile> domain;
  std::optional<SpaceFile> codomain;
  std::vector<std::pair<std::string, std::string>> assignment;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  /// Spaces (set-level theorems), maps (map-level theorems) or fixture files.
  std::size_t instances = 0;
  /// Individual assertions evaluated.
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  /// The first kMaxRecordedFailures failures in canonical sweep order.
  std::vector<Failure> failures;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return failure_count == 0; }
};

inline constexpr std::size_t kMaxRecordedFailures = 8;

struct Implication {
  MapClass antecedent;
  MapClass consequent;

  friend bool operator==(const Implication&, const Implication&) = default;
};

/// Parses "h-continuous=>continuous" (also accepts "->").
std::optional<Implication> parse_implication(std::string_view text);
std::string to_string(const Implication& implication);

/// The implications between map classes that hold in general.
inline constexpr std::array<Implication, 8> kForwardImplications = {{
    {MapClass::nano_continuous, MapClass::h_continuous},
    {MapClass::nano_open_map, MapClass::h_open_map},
    {MapClass::h_irresolute, MapClass::h_continuous},
    {MapClass::nano_homeomorphism, MapClass::h_homeomorphism},
    {MapClass::h_totally_continuous, MapClass::nano_totally_continuous},
    {MapClass::h_totally_continuous, MapClass::h_irresolute},
    {MapClass::nano_contra_continuous, MapClass::h_contra_continuous},
    {MapClass::nano_totally_continuous, MapClass::h_contra_continuous},
}};

/// Their converses, none of which holds in general.
inline constexpr std::array<Implication, 8> kConverseImplications = {{
    {MapClass::h_continuous, MapClass::nano_continuous},
    {MapClass::h_open_map, MapClass::nano_open_map},
    {MapClass::h_continuous, MapClass::h_irresolute},
    {MapClass::h_homeomorphism, MapClass::nano_homeomorphism},
    {MapClass::nano_totally_continuous, MapClass::h_totally_continuous},
    {MapClass::h_irresolute, MapClass::h_totally_continuous},
    {MapClass::h_contra_continuous, MapClass::nano_contra_continuous},
    {MapClass::h_contra_continuous, MapClass::nano_totally_continuous},
}};

/// A map on which `antecedent` holds and `consequent` fails.
struct Witness {
  Implication implication;
  SpaceFile domain;
  SpaceFile codomain;
  std::vector<std::pair<std::string, std::string>> assignment;
  MapClassification classification;
};

/// Rebuilds the witness map and checks that it reproduces the recorded
/// classification and still refutes the implication.
bool replay(const Witness& witness);

/// "a", "b", ... (then "e16", "e17", ... past the alphabet).
std::vector<std::string> letter_labels(std::size_t n);
/// "1", "2", ...
std::vector<std::string> digit_labels(std::size_t n);

/// Visits every (partition, X) pair on `universe` once: partitions in
/// restricted-growth-string order, then X in canonical subset order.
/// Throws CapExceeded above options.max_universe.
void for_each_space(const Universe& universe, SpaceOptions options,
                    const std::function<void(const NanoSpace&)>& visit);
std::vector<NanoSpace> enumerate_spaces(const Universe& universe, SpaceOptions options = {});
/// Universe labelled with letter_labels(n); n must be at least 1.
std::vector<NanoSpace> enumerate_spaces(std::size_t n, SpaceOptions options = {});

/// Assignments in lexicographic order (first domain element most significant).
/// With `bijective_only`, only permutations; the sizes must then agree.
void for_each_assignment(std::size_t domain_size, std::size_t codomain_size, bool bijective_only,
                         const std::function<void(std::span<const std::size_t>)>& visit);
std::vector<PointMap> enumerate_maps(const NanoSpace& domain, const NanoSpace& codomain, bool bijective_only);

struct SweepOptions {
  /// Set-level theorems run on every space with 1..max_space_size elements.
  std::size_t max_space_size = 4;
  /// Map-level theorems run on every map between spaces of 1..max_map_size elements.
  std::size_t max_map_size = 3;
  unsigned workers = 1;
  std::size_t max_universe = kDefaultMaxUniverse;
};

std::vector<TheoremReport> verify_theorems(const SweepOptions& options);

/// Replays every *.json fixture in `dir` (sorted by name) against its
/// "expect" block.
TheoremReport run_fixtures(const std::filesystem::path& dir, SpaceOptions options = {});

/// First map, in order of (domain size, codomain size, domain space, codomain
/// space, assignment), that satisfies the antecedent and not the consequent.
/// Domain spaces use letter labels, codomain spaces digit labels. The result
/// does not depend on `workers`.
std::optional<Witness> mine_counterexample(const Implication& implication, std::size_t max_domain,
                                           std::size_t max_codomain, unsigned workers = 1,
                                           std::size_t max_universe = kDefaultMaxUniverse);

}  // namespace nano
