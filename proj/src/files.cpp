#include "nano/files.hpp"

#include <fstream>

namespace nano {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& doc, const char* name, std::string_view what) {
  if (!doc.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string(what) + " is missing field '" + name + "'");
  return *it;
}

std::vector<std::string> label_list(const json& value, std::string_view what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) throw ParseError(std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

SpaceFile space_or_path(const json& value, const std::filesystem::path& base_dir, std::string_view what) {
  if (value.is_string()) {
    std::filesystem::path p = value.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return load_space_file(p);
  }
  if (!value.is_object()) throw ParseError(std::string(what) + " must be a space object or a path");
  return parse_space_file(value);
}

}  // namespace

SpaceFile parse_space_file(const json& doc) {
  SpaceFile out;
  out.universe = label_list(field(doc, "universe", "space"), "'universe'");
  const json& blocks = field(doc, "partition", "space");
  if (!blocks.is_array()) throw ParseError("'partition' must be an array of blocks");
  for (const auto& block : blocks) out.partition.push_back(label_list(block, "partition block"));
  out.x = label_list(field(doc, "x", "space"), "'x'");
  return out;
}

MapFile parse_map_file(const json& doc, const std::filesystem::path& base_dir) {
  MapFile out;
  out.domain = space_or_path(field(doc, "domain", "map document"), base_dir, "'domain'");
  out.codomain = space_or_path(field(doc, "codomain", "map document"), base_dir, "'codomain'");
  const json& assignment = field(doc, "map", "map document");
  if (!assignment.is_object()) throw ParseError("'map' must be an object of label pairs");
  for (const auto& [from, to] : assignment.items()) {
    if (!to.is_string()) throw ParseError("image of '" + from + "' must be a string");
    out.map.emplace_back(from, to.get<std::string>());
  }
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

SpaceFile load_space_file(const std::filesystem::path& path) { return parse_space_file(read_json(path)); }

MapFile load_map_file(const std::filesystem::path& path) {
  return parse_map_file(read_json(path), path.parent_path());
}

NanoSpace build_space(const SpaceFile& file, SpaceOptions options) {
  Universe universe(file.universe);
  Partition partition = make_partition(universe, file.partition);
  Mask x = 0;
  for (const auto& label : file.x) x |= Mask{1} << universe.index_or_throw(label);
  return build_nano_space(partition, universe.from_mask(x), options);
}

PointMap build_map(const MapFile& file, SpaceOptions options) {
  NanoSpace domain = build_space(file.domain, options);
  NanoSpace codomain = build_space(file.codomain, options);
  const auto& u = domain.universe();
  const auto& v = codomain.universe();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assignment(u.size(), kUnset);
  for (const auto& [from, to] : file.map) {
    const auto i = u.index_or_throw(from);
    if (assignment[i] != kUnset) throw ValidationError("'" + from + "' is assigned twice");
    auto j = v.index_of(to);
    if (!j) throw ValidationError("image '" + to + "' of '" + from + "' is not a codomain element");
    assignment[i] = *j;
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == kUnset) throw ValidationError("map assigns no image to '" + u.label(i) + "'");
  }
  return PointMap(domain, codomain, std::move(assignment));
}

SpaceFile describe_space(const NanoSpace& space) {
  SpaceFile out;
  const auto labels = space.universe().labels();
  out.universe.assign(labels.begin(), labels.end());
  for (const auto& block : space.partition().blocks()) out.partition.push_back(block.labels());
  out.x = space.target().labels();
  return out;
}

std::vector<std::pair<std::string, std::string>> describe_assignment(const PointMap& map) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& u = map.domain().universe();
  const auto& v = map.codomain().universe();
  for (std::size_t i = 0; i < u.size(); ++i) out.emplace_back(u.label(i), v.label(map(i)));
  return out;
}

ordered_json to_json(const SpaceFile& file) {
  ordered_json out;
  out["universe"] = file.universe;
  out["partition"] = file.partition;
  out["x"] = file.x;
  return out;
}

ordered_json to_json(const Subset& subset) { return ordered_json(subset.labels()); }

ordered_json to_json(const SubsetFamily& family) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < family.size(); ++i) out.push_back(to_json(family[i]));
  return out;
}

}  // namespace nano
