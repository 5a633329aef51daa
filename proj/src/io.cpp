#include "bispace/io.hpp"

#include <fstream>
#include <sstream>

namespace bispace::io {

namespace fs = std::filesystem;

namespace {

std::size_t to_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw Error(Errc::ParseError, std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  return j;
}

std::vector<std::size_t> index_row(const json& j, const char* what) {
  std::vector<std::size_t> row;
  for (const json& v : array(j, what)) row.push_back(to_index(v, what));
  return row;
}

std::string row_text(const std::vector<std::size_t>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(row[i]);
  }
  return out + "]";
}

fs::path resolve(const fs::path& p, const fs::path& base_dir) {
  return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
}

std::size_t parse_degree(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::ParseError, "bad group parameter \"" + s + "\"");
  return std::stoul(s);
}

}  // namespace

std::optional<FiniteGroup> named_group(const std::string& spec) {
  if (spec == "trivial") return FiniteGroup::trivial();
  if (spec == "klein4") return FiniteGroup::klein4();
  if (spec.rfind("cyclic:", 0) == 0) return FiniteGroup::cyclic(parse_degree(spec.substr(7)));
  if (spec.rfind("symmetric:", 0) == 0) return FiniteGroup::symmetric(parse_degree(spec.substr(10)));
  return std::nullopt;
}

GroupPtr resolve_group_spec(const std::string& spec) {
  if (auto g = named_group(spec)) return std::make_shared<const FiniteGroup>(std::move(*g));
  return std::make_shared<const FiniteGroup>(load_group(spec));
}

FiniteGroup group_from_json(const json& j) {
  const std::size_t m = to_index(field(j, "order"), "order");
  CayleyTable table;
  for (const json& row : array(field(j, "table"), "table")) table.push_back(index_row(row, "table row"));
  if (table.size() != m) throw Error(Errc::Malformed, "table size does not match order", {m, table.size()});
  return FiniteGroup::from_table(std::move(table));
}

std::string group_to_json(const FiniteGroup& G) {
  std::ostringstream os;
  os << "{\"order\": " << G.order() << ", \"table\": [";
  const CayleyTable t = G.table();
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << row_text(t[i]);
  os << "]}";
  return os.str();
}

BinaryAction action_from_json(const json& j, const fs::path& base_dir) {
  const json& gj = field(j, "group");
  GroupPtr G;
  if (gj.is_string())
    G = std::make_shared<const FiniteGroup>(load_group(resolve(gj.get<std::string>(), base_dir)));
  else
    G = std::make_shared<const FiniteGroup>(group_from_json(gj));

  const std::size_t n = to_index(field(j, "carrier_size"), "carrier_size");
  ActionTable act;
  for (const json& slice : array(field(j, "act"), "act")) {
    std::vector<std::vector<Point>> rows;
    for (const json& row : array(slice, "act slice")) rows.push_back(index_row(row, "act row"));
    act.push_back(std::move(rows));
  }
  return BinaryAction(std::move(G), n, act);
}

std::string action_to_json(const BinaryAction& a) {
  std::ostringstream os;
  os << "{\n  \"group\": " << group_to_json(a.group()) << ",\n";
  os << "  \"carrier_size\": " << a.carrier_size() << ",\n";
  os << "  \"act\": [\n";
  const ActionTable t = a.table();
  for (std::size_t g = 0; g < t.size(); ++g) {
    os << "    [";
    for (std::size_t x1 = 0; x1 < t[g].size(); ++x1) os << (x1 ? ", " : "") << row_text(t[g][x1]);
    os << (g + 1 < t.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

SubsetOfCarrier subset_from_json(const json& j, std::size_t carrier_size) {
  return SubsetOfCarrier(carrier_size, index_row(j, "subset"));
}

std::string subset_to_json(const SubsetOfCarrier& A) { return row_text(A.members()) + "\n"; }

PartialEquivariantMap partial_map_from_json(const json& j, const fs::path& base_dir) {
  const json& sj = field(j, "source");
  const json& tj = field(j, "target");
  if (!sj.is_string() || !tj.is_string()) throw Error(Errc::ParseError, "source and target must be action paths");
  auto source = std::make_shared<const BinaryAction>(load_action(resolve(sj.get<std::string>(), base_dir)));
  auto target = std::make_shared<const BinaryAction>(load_action(resolve(tj.get<std::string>(), base_dir)));

  std::vector<std::pair<Point, Point>> pairs;
  for (const json& p : array(field(j, "pairs"), "pairs")) {
    const auto ab = index_row(p, "pair");
    if (ab.size() != 2) throw Error(Errc::ParseError, "each pair must be [a, y]");
    pairs.emplace_back(ab[0], ab[1]);
  }
  return PartialEquivariantMap::from_pairs(std::move(source), std::move(target), pairs);
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileNotFound, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

FiniteGroup load_group(const fs::path& path) { return group_from_json(read_json_file(path)); }

BinaryAction load_action(const fs::path& path) {
  return action_from_json(read_json_file(path), path.parent_path());
}

SubsetOfCarrier load_subset(const fs::path& path, std::size_t carrier_size) {
  return subset_from_json(read_json_file(path), carrier_size);
}

PartialEquivariantMap load_partial_map(const fs::path& path) {
  return partial_map_from_json(read_json_file(path), path.parent_path());
}

}  // namespace bispace::io
