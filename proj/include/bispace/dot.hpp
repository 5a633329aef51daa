#pragma once

#include <filesystem>
#include <string>

#include "bispace/orbits.hpp"

namespace bispace {

/// Graphviz rendering of X|G: one cluster per orbit in orbit-id order, one
/// node per carrier point in ascending order. No edges.
std::string orbit_dot(const OrbitPartition& p);

/// Writes orbit_dot(p) to `out`. Throws IoError.
void export_dot(const OrbitPartition& p, const std::filesystem::path& out);

}  // namespace bispace
