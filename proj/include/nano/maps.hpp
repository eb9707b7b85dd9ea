#pragma once

// Total maps between two nano spaces and the eleven map classes built on
// open, closed, clopen, h-open and h-closed sets.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "nano/h_sets.hpp"

namespace nano {

/// A total function from the domain universe into the codomain universe,
/// stored as one codomain index per domain element.
class PointMap {
 public:
  /// Throws ValidationError unless `assignment` has one in-range image per
  /// domain element.
  PointMap(NanoSpace domain, NanoSpace codomain, std::vector<std::size_t> assignment);

  const NanoSpace& domain() const noexcept { return domain_; }
  const NanoSpace& codomain() const noexcept { return codomain_; }
  std::span<const std::size_t> assignment() const noexcept { return assignment_; }
  std::size_t operator()(std::size_t element) const { return assignment_.at(element); }

  bool is_bijective() const noexcept;

 private:
  NanoSpace domain_;
  NanoSpace codomain_;
  std::vector<std::size_t> assignment_;
};

/// Identity on labels; both universes must carry the same label set.
PointMap identity_map(const NanoSpace& domain, const NanoSpace& codomain);

Subset preimage(const PointMap& map, const Subset& s);
Subset image(const PointMap& map, const Subset& s);
Mask preimage_mask(const PointMap& map, Mask s) noexcept;
Mask image_mask(const PointMap& map, Mask s) noexcept;

enum class MapClass {
  nano_continuous,
  nano_open_map,
  nano_homeomorphism,
  nano_totally_continuous,
  nano_contra_continuous,
  h_continuous,
  h_open_map,
  h_irresolute,
  h_homeomorphism,
  h_totally_continuous,
  h_contra_continuous,
};

inline constexpr std::array<MapClass, 11> kAllMapClasses = {
    MapClass::nano_continuous,      MapClass::nano_open_map,          MapClass::nano_homeomorphism,
    MapClass::nano_totally_continuous, MapClass::nano_contra_continuous, MapClass::h_continuous,
    MapClass::h_open_map,           MapClass::h_irresolute,           MapClass::h_homeomorphism,
    MapClass::h_totally_continuous, MapClass::h_contra_continuous,
};

/// Field name used in reports ("h_irresolute").
std::string_view field_name(MapClass c) noexcept;
/// Command-line name ("h-irresolute", "continuous", "open", ...).
std::string_view cli_name(MapClass c) noexcept;
/// Accepts either form, plus "nano-" prefixed and "-map" suffixed variants.
std::optional<MapClass> parse_map_class(std::string_view name);

bool is_nano_continuous(const PointMap& map);
bool is_nano_open_map(const PointMap& map);
bool is_nano_homeomorphism(const PointMap& map);
bool is_nano_totally_continuous(const PointMap& map);
bool is_nano_contra_continuous(const PointMap& map);
bool is_h_continuous(const PointMap& map);
bool is_h_open_map(const PointMap& map);
/// Needs the codomain h-open family; throws CapExceeded above the cap.
bool is_h_irresolute(const PointMap& map);
bool is_h_homeomorphism(const PointMap& map);
/// Needs the codomain h-open family; throws CapExceeded above the cap.
bool is_h_totally_continuous(const PointMap& map);
bool is_h_contra_continuous(const PointMap& map);

bool holds(const PointMap& map, MapClass c);

/// Sets that break class `c`, canonically ordered. For preimage-based classes
/// these are codomain sets whose preimage fails the requirement; for the two
/// open-map classes, domain open sets whose image fails it. Homeomorphism
/// classes report the violations of their continuity and openness parts; a
/// non-bijective map can fail them with no violating set.
std::vector<Subset> violations(const PointMap& map, MapClass c);

struct MapClassification {
  bool nano_continuous = false;
  bool nano_open_map = false;
  bool nano_homeomorphism = false;
  bool nano_totally_continuous = false;
  bool nano_contra_continuous = false;
  bool h_continuous = false;
  bool h_open_map = false;
  bool h_irresolute = false;
  bool h_homeomorphism = false;
  bool h_totally_continuous = false;
  bool h_contra_continuous = false;
  bool bijective = false;

  bool get(MapClass c) const noexcept;
  friend bool operator==(const MapClassification&, const MapClassification&) = default;
};

MapClassification classify_map(const PointMap& map);

/// One instance where a characterization inclusion is proper.
struct StrictInclusion {
  int condition;     // 3, 4 or 5
  Subset argument;   // B (condition 3, domain) or C (conditions 4 and 5, codomain)
  Subset smaller;
  Subset larger;
};

/// The five equivalent characterizations of h-continuity, each evaluated on
/// its own:
///   1. preimages of open sets are h-open;
///   2. preimages of closed sets are h-closed;
///   3. image(hCl(B)) <= nCl(image(B)) for every B in the domain;
///   4. hCl(preimage(C)) <= preimage(nCl(C)) for every C in the codomain;
///   5. preimage(nInt(C)) <= hInt(preimage(C)) for every C in the codomain.
struct HContinuityConditions {
  std::array<bool, 5> holds{};
  std::vector<StrictInclusion> strict;

  bool agree() const noexcept;
};

HContinuityConditions check_h_continuity_conditions(const PointMap& map);

}  // namespace nano
