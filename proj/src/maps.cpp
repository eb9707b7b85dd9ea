#include "nano/maps.hpp"

#include <algorithm>
#include <string>

namespace nano {

PointMap::PointMap(NanoSpace domain, NanoSpace codomain, std::vector<std::size_t> assignment)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assignment_(std::move(assignment)) {
  if (assignment_.size() != domain_.universe().size()) {
    throw ValidationError("map assigns " + std::to_string(assignment_.size()) + " images for " +
                          std::to_string(domain_.universe().size()) + " domain elements");
  }
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] >= codomain_.universe().size()) {
      throw ValidationError("image of '" + domain_.universe().label(i) + "' is outside the codomain");
    }
  }
}

bool PointMap::is_bijective() const noexcept {
  if (assignment_.size() != codomain_.universe().size()) return false;
  Mask hit = 0;
  for (auto v : assignment_) hit |= Mask{1} << v;
  return hit == codomain_.universe().full_mask();
}

PointMap identity_map(const NanoSpace& domain, const NanoSpace& codomain) {
  const auto& u = domain.universe();
  const auto& v = codomain.universe();
  if (u.size() != v.size()) throw ValidationError("identity map needs universes of equal size");
  std::vector<std::size_t> assignment(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) assignment[i] = v.index_or_throw(u.label(i));
  return PointMap(domain, codomain, std::move(assignment));
}

Mask preimage_mask(const PointMap& map, Mask s) noexcept {
  Mask out = 0;
  const auto a = map.assignment();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((s >> a[i]) & 1U) out |= Mask{1} << i;
  }
  return out;
}

Mask image_mask(const PointMap& map, Mask s) noexcept {
  Mask out = 0;
  const auto a = map.assignment();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((s >> i) & 1U) out |= Mask{1} << a[i];
  }
  return out;
}

Subset preimage(const PointMap& map, const Subset& s) {
  require_same_universe(map.codomain().universe(), s.universe(), "preimage");
  return Subset(map.domain().universe(), preimage_mask(map, s.bits()));
}

Subset image(const PointMap& map, const Subset& s) {
  require_same_universe(map.domain().universe(), s.universe(), "image");
  return Subset(map.codomain().universe(), image_mask(map, s.bits()));
}

namespace {

struct ClassNames {
  MapClass cls;
  std::string_view field;
  std::string_view cli;
};

constexpr std::array<ClassNames, 11> kNames = {{
    {MapClass::nano_continuous, "nano_continuous", "continuous"},
    {MapClass::nano_open_map, "nano_open_map", "open"},
    {MapClass::nano_homeomorphism, "nano_homeomorphism", "homeomorphism"},
    {MapClass::nano_totally_continuous, "nano_totally_continuous", "totally-continuous"},
    {MapClass::nano_contra_continuous, "nano_contra_continuous", "contra-continuous"},
    {MapClass::h_continuous, "h_continuous", "h-continuous"},
    {MapClass::h_open_map, "h_open_map", "h-open"},
    {MapClass::h_irresolute, "h_irresolute", "h-irresolute"},
    {MapClass::h_homeomorphism, "h_homeomorphism", "h-homeomorphism"},
    {MapClass::h_totally_continuous, "h_totally_continuous", "h-totally-continuous"},
    {MapClass::h_contra_continuous, "h_contra_continuous", "h-contra-continuous"},
}};

const ClassNames& names(MapClass c) {
  return kNames[static_cast<std::size_t>(c)];
}

// Which family a preimage-based class quantifies over in the codomain.
enum class Source { codomain_open, codomain_h_open };

// Requirement on the preimage (or, for open maps, the image).
enum class Target { open, closed, clopen, h_open, h_closed };

bool meets(const NanoSpace& space, Target t, Mask s) {
  switch (t) {
    case Target::open:
      return space.open_family().contains_mask(s);
    case Target::closed:
      return space.closed_family().contains_mask(s);
    case Target::clopen:
      return space.open_family().contains_mask(s) && space.closed_family().contains_mask(s);
    case Target::h_open:
      return is_nano_h_open_mask(space, s);
    case Target::h_closed:
      return is_nano_h_open_mask(space, ~s & space.universe().full_mask());
  }
  return false;
}

std::span<const Mask> source_masks(const PointMap& map, Source s) {
  if (s == Source::codomain_open) return map.codomain().open_family().masks();
  return h_open_family(map.codomain()).members().masks();
}

// Calls `bad(mask)` for each source set whose preimage misses `t`; stops
// when `bad` returns false.
template <class OnViolation>
void scan_preimages(const PointMap& map, Source s, Target t, OnViolation&& bad) {
  for (Mask m : source_masks(map, s)) {
    if (!meets(map.domain(), t, preimage_mask(map, m)) && !bad(m)) return;
  }
}

template <class OnViolation>
void scan_images(const PointMap& map, Target t, OnViolation&& bad) {
  for (Mask m : map.domain().open_family().masks()) {
    if (!meets(map.codomain(), t, image_mask(map, m)) && !bad(m)) return;
  }
}

bool all_preimages(const PointMap& map, Source s, Target t) {
  bool ok = true;
  scan_preimages(map, s, t, [&](Mask) { return ok = false; });
  return ok;
}

bool all_images(const PointMap& map, Target t) {
  bool ok = true;
  scan_images(map, t, [&](Mask) { return ok = false; });
  return ok;
}

}  // namespace

std::string_view field_name(MapClass c) noexcept { return names(c).field; }
std::string_view cli_name(MapClass c) noexcept { return names(c).cli; }

std::optional<MapClass> parse_map_class(std::string_view name) {
  const auto first = name.find_first_not_of(" \t");
  if (first == std::string_view::npos) return std::nullopt;
  name = name.substr(first, name.find_last_not_of(" \t") - first + 1);
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  if (key.rfind("nano-", 0) == 0) key.erase(0, 5);
  if (key.size() > 4 && key.compare(key.size() - 4, 4, "-map") == 0) key.erase(key.size() - 4);
  for (const auto& n : kNames) {
    if (n.cli == key) return n.cls;
  }
  return std::nullopt;
}

bool is_nano_continuous(const PointMap& map) { return all_preimages(map, Source::codomain_open, Target::open); }
bool is_nano_open_map(const PointMap& map) { return all_images(map, Target::open); }
bool is_nano_homeomorphism(const PointMap& map) {
  return map.is_bijective() && is_nano_continuous(map) && is_nano_open_map(map);
}
bool is_nano_totally_continuous(const PointMap& map) {
  return all_preimages(map, Source::codomain_open, Target::clopen);
}
bool is_nano_contra_continuous(const PointMap& map) {
  return all_preimages(map, Source::codomain_open, Target::closed);
}
bool is_h_continuous(const PointMap& map) { return all_preimages(map, Source::codomain_open, Target::h_open); }
bool is_h_open_map(const PointMap& map) { return all_images(map, Target::h_open); }
bool is_h_irresolute(const PointMap& map) { return all_preimages(map, Source::codomain_h_open, Target::h_open); }
bool is_h_homeomorphism(const PointMap& map) {
  return map.is_bijective() && is_h_continuous(map) && is_h_open_map(map);
}
bool is_h_totally_continuous(const PointMap& map) {
  return all_preimages(map, Source::codomain_h_open, Target::clopen);
}
bool is_h_contra_continuous(const PointMap& map) {
  return all_preimages(map, Source::codomain_open, Target::h_closed);
}

bool holds(const PointMap& map, MapClass c) {
  switch (c) {
    case MapClass::nano_continuous: return is_nano_continuous(map);
    case MapClass::nano_open_map: return is_nano_open_map(map);
    case MapClass::nano_homeomorphism: return is_nano_homeomorphism(map);
    case MapClass::nano_totally_continuous: return is_nano_totally_continuous(map);
    case MapClass::nano_contra_continuous: return is_nano_contra_continuous(map);
    case MapClass::h_continuous: return is_h_continuous(map);
    case MapClass::h_open_map: return is_h_open_map(map);
    case MapClass::h_irresolute: return is_h_irresolute(map);
    case MapClass::h_homeomorphism: return is_h_homeomorphism(map);
    case MapClass::h_totally_continuous: return is_h_totally_continuous(map);
    case MapClass::h_contra_continuous: return is_h_contra_continuous(map);
  }
  return false;
}

std::vector<Subset> violations(const PointMap& map, MapClass c) {
  std::vector<Subset> out;
  const auto& dom = map.domain().universe();
  const auto& cod = map.codomain().universe();
  auto from_codomain = [&](Mask m) { out.emplace_back(cod, m); return true; };
  auto from_domain = [&](Mask m) { out.emplace_back(dom, m); return true; };
  switch (c) {
    case MapClass::nano_continuous:
      scan_preimages(map, Source::codomain_open, Target::open, from_codomain);
      break;
    case MapClass::nano_open_map:
      scan_images(map, Target::open, from_domain);
      break;
    case MapClass::nano_homeomorphism:
      scan_preimages(map, Source::codomain_open, Target::open, from_codomain);
      scan_images(map, Target::open, from_domain);
      break;
    case MapClass::nano_totally_continuous:
      scan_preimages(map, Source::codomain_open, Target::clopen, from_codomain);
      break;
    case MapClass::nano_contra_continuous:
      scan_preimages(map, Source::codomain_open, Target::closed, from_codomain);
      break;
    case MapClass::h_continuous:
      scan_preimages(map, Source::codomain_open, Target::h_open, from_codomain);
      break;
    case MapClass::h_open_map:
      scan_images(map, Target::h_open, from_domain);
      break;
    case MapClass::h_irresolute:
      scan_preimages(map, Source::codomain_h_open, Target::h_open, from_codomain);
      break;
    case MapClass::h_homeomorphism:
      scan_preimages(map, Source::codomain_open, Target::h_open, from_codomain);
      scan_images(map, Target::h_open, from_domain);
      break;
    case MapClass::h_totally_continuous:
      scan_preimages(map, Source::codomain_h_open, Target::clopen, from_codomain);
      break;
    case MapClass::h_contra_continuous:
      scan_preimages(map, Source::codomain_open, Target::h_closed, from_codomain);
      break;
  }
  return out;
}

bool MapClassification::get(MapClass c) const noexcept {
  switch (c) {
    case MapClass::nano_continuous: return nano_continuous;
    case MapClass::nano_open_map: return nano_open_map;
    case MapClass::nano_homeomorphism: return nano_homeomorphism;
    case MapClass::nano_totally_continuous: return nano_totally_continuous;
    case MapClass::nano_contra_continuous: return nano_contra_continuous;
    case MapClass::h_continuous: return h_continuous;
    case MapClass::h_open_map: return h_open_map;
    case MapClass::h_irresolute: return h_irresolute;
    case MapClass::h_homeomorphism: return h_homeomorphism;
    case MapClass::h_totally_continuous: return h_totally_continuous;
    case MapClass::h_contra_continuous: return h_contra_continuous;
  }
  return false;
}

MapClassification classify_map(const PointMap& map) {
  MapClassification out;
  out.bijective = map.is_bijective();
  out.nano_continuous = is_nano_continuous(map);
  out.nano_open_map = is_nano_open_map(map);
  out.nano_homeomorphism = is_nano_homeomorphism(map);
  out.nano_totally_continuous = is_nano_totally_continuous(map);
  out.nano_contra_continuous = is_nano_contra_continuous(map);
  out.h_continuous = is_h_continuous(map);
  out.h_open_map = is_h_open_map(map);
  out.h_irresolute = is_h_irresolute(map);
  out.h_homeomorphism = is_h_homeomorphism(map);
  out.h_totally_continuous = is_h_totally_continuous(map);
  out.h_contra_continuous = is_h_contra_continuous(map);
  return out;
}

bool HContinuityConditions::agree() const noexcept {
  return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
}

HContinuityConditions check_h_continuity_conditions(const PointMap& map) {
  const NanoSpace& dom = map.domain();
  const NanoSpace& cod = map.codomain();
  dom.require_within_cap("h-continuity conditions");
  cod.require_within_cap("h-continuity conditions");
  h_open_family(dom);

  HContinuityConditions out;
  out.holds[0] = is_h_continuous(map);

  const Mask dom_full = dom.universe().full_mask();
  out.holds[1] = true;
  for (Mask k : cod.closed_family().masks()) {
    if (!is_nano_h_open_mask(dom, ~preimage_mask(map, k) & dom_full)) {
      out.holds[1] = false;
      break;
    }
  }

  // Records `smaller <= larger`, keeping proper inclusions as witnesses.
  auto inclusion = [&](int condition, const Universe& arg_u, Mask arg, const Universe& side_u, Mask smaller,
                       Mask larger) {
    if ((smaller & ~larger) != 0) {
      out.holds[condition - 1] = false;
    } else if (smaller != larger) {
      out.strict.push_back({condition, Subset(arg_u, arg), Subset(side_u, smaller), Subset(side_u, larger)});
    }
  };

  out.holds[2] = out.holds[3] = out.holds[4] = true;
  const Universe& u = dom.universe();
  const Universe& v = cod.universe();
  for (Mask b : all_masks_canonical(u)) {
    inclusion(3, u, b, v, image_mask(map, h_closure_mask(dom, b)), n_closure_mask(cod, image_mask(map, b)));
  }
  for (Mask c : all_masks_canonical(v)) {
    const Mask pre = preimage_mask(map, c);
    inclusion(4, v, c, u, h_closure_mask(dom, pre), preimage_mask(map, n_closure_mask(cod, c)));
  }
  for (Mask c : all_masks_canonical(v)) {
    inclusion(5, v, c, u, preimage_mask(map, n_interior_mask(cod, c)), h_interior_mask(dom, preimage_mask(map, c)));
  }
  return out;
}

}  // namespace nano
