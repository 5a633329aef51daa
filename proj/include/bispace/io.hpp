#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "bispace/action.hpp"
#include "bispace/extension.hpp"
#include "bispace/group.hpp"
#include "bispace/orbits.hpp"

namespace bispace::io {

using nlohmann::json;

/// `trivial`, `cyclic:k`, `klein4`, `symmetric:k`; nothing for other names.
/// A known name with a bad parameter throws ParseError.
std::optional<FiniteGroup> named_group(const std::string& spec);

/// A named group, or else a path to a group file.
GroupPtr resolve_group_spec(const std::string& spec);

// Group file: {"order": m, "table": [[...], ...]}. Identity and inverses are
// recomputed on load.
FiniteGroup group_from_json(const json& j);
std::string group_to_json(const FiniteGroup& G);

// Action file: {"group": <group object | path>, "carrier_size": n,
// "act": [[[...]]]} indexed [g][x1][x2]. A relative group path resolves
// against `base_dir`.
BinaryAction action_from_json(const json& j, const std::filesystem::path& base_dir = {});
std::string action_to_json(const BinaryAction& a);

// Subset file: a JSON array of carrier indices.
SubsetOfCarrier subset_from_json(const json& j, std::size_t carrier_size);
std::string subset_to_json(const SubsetOfCarrier& A);

// Partial map file: {"source": <action path>, "target": <action path>,
// "pairs": [[a, y], ...]}. Relative paths resolve against `base_dir`.
PartialEquivariantMap partial_map_from_json(const json& j, const std::filesystem::path& base_dir = {});

/// Reads and parses a JSON file. Throws FileNotFound or ParseError.
json read_json_file(const std::filesystem::path& path);
/// Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

FiniteGroup load_group(const std::filesystem::path& path);
BinaryAction load_action(const std::filesystem::path& path);
SubsetOfCarrier load_subset(const std::filesystem::path& path, std::size_t carrier_size);
PartialEquivariantMap load_partial_map(const std::filesystem::path& path);

}  // namespace bispace::io
