#pragma once

// JSON documents describing spaces and maps.
//
//   space: {"universe": [...], "partition": [[...], ...], "x": [...]}
//   map:   {"domain": <space or path>, "codomain": <space or path>,
//           "map": {"<domain label>": "<codomain label>", ...}}
//
// Unknown fields are ignored, so reports and fixtures can carry extra data.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nano/maps.hpp"

namespace nano {

struct SpaceFile {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> partition;
  std::vector<std::string> x;

  friend bool operator==(const SpaceFile&, const SpaceFile&) = default;
};

struct MapFile {
  SpaceFile domain;
  SpaceFile codomain;
  /// (domain label, codomain label) pairs, sorted by domain label.
  std::vector<std::pair<std::string, std::string>> map;
};

/// Throws ParseError on a shape error (missing field, wrong type).
SpaceFile parse_space_file(const nlohmann::json& doc);
/// Relative space paths inside a map document resolve against `base_dir`.
MapFile parse_map_file(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});

/// Reads and parses a file; unreadable files and malformed JSON are ParseErrors.
nlohmann::json read_json(const std::filesystem::path& path);
SpaceFile load_space_file(const std::filesystem::path& path);
MapFile load_map_file(const std::filesystem::path& path);

/// Validates the description (ValidationError) and builds the space.
NanoSpace build_space(const SpaceFile& file, SpaceOptions options = {});
/// Requires every domain label to be assigned exactly once.
PointMap build_map(const MapFile& file, SpaceOptions options = {});

/// Canonical description: blocks in canonical order, labels in universe order.
SpaceFile describe_space(const NanoSpace& space);
std::vector<std::pair<std::string, std::string>> describe_assignment(const PointMap& map);

nlohmann::ordered_json to_json(const SpaceFile& file);
nlohmann::ordered_json to_json(const Subset& subset);
nlohmann::ordered_json to_json(const SubsetFamily& family);

}  // namespace nano
