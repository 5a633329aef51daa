#include "bispace/dot.hpp"

#include <sstream>

#include "bispace/io.hpp"

namespace bispace {

std::string orbit_dot(const OrbitPartition& p) {
  std::ostringstream os;
  os << "graph orbits {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t k = 0; k < p.orbit_count(); ++k) {
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"orbit " << k << "\";\n";
    for (Point x : p.block(k)) os << "    \"" << x << "\";\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

void export_dot(const OrbitPartition& p, const std::filesystem::path& out) {
  io::write_text_file(out, orbit_dot(p));
}

}  // namespace bispace
