#include "bispace/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "bispace/action.hpp"
#include "bispace/dot.hpp"
#include "bispace/extension.hpp"
#include "bispace/io.hpp"
#include "bispace/orbits.hpp"
#include "bispace/search.hpp"
#include "bispace/sections.hpp"

namespace bispace::cli {

namespace {

/// Raised for anything that makes the input itself unusable (exit 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(F&& loader) {
  try {
    return loader();
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

ActionPtr load_action_ptr(const std::string& path) {
  return load([&] { return std::make_shared<const BinaryAction>(io::load_action(path)); });
}

std::string set_text(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string witness_line(const std::string& kind, const Witness& tuple) {
  return "WITNESS kind=" + kind + " tuple=" + format_witness(tuple);
}

std::string derivation_text(const Derivation& d) {
  if (d.empty()) return "seed";
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += "; ";
    s += std::to_string(d[i].g) + "(" + std::to_string(d[i].x1) + "," + std::to_string(d[i].x2) +
         ")=" + std::to_string(d[i].result);
  }
  return s;
}

std::vector<Point> parse_point_list(const std::string& text) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos) throw InputError("bad point index \"" + item + "\"");
    out.push_back(std::stoul(item));
  }
  return out;
}

struct Options {
  std::string output;
  std::string input;
  std::string subset_file;
  std::string subset_list;
  std::string map_file;
  std::string engine = "structural";
  std::string group = "trivial";
  std::string variant = "distributive";
  std::string kind = "nondistributive";
  bool list = false;
  std::size_t limit = 0;
  std::size_t carrier = 1;
  std::uint64_t seed = 0;
  std::size_t max_trials = 1000;
  std::size_t threads = 1;
  std::optional<std::size_t> x;
  std::optional<std::size_t> xp;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const io::json j = load([&] { return io::read_json_file(o.input); });
  try {
    if (j.is_object() && j.contains("pairs")) {
      const auto f = io::partial_map_from_json(j, std::filesystem::path(o.input).parent_path());
      out << "valid map domain=" << set_text(f.domain().members()) << "\n";
    } else if (j.is_object() && j.contains("act")) {
      const auto a = io::action_from_json(j, std::filesystem::path(o.input).parent_path());
      out << "valid action order=" << a.group().order() << " carrier=" << a.carrier_size() << "\n";
    } else if (j.is_object() && j.contains("table")) {
      const auto G = io::group_from_json(j);
      out << "valid group order=" << G.order() << "\n";
    } else {
      throw InputError("unrecognized object in " + o.input);
    }
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::FileNotFound:
      case Errc::IoError:
        throw InputError(e.what());
      default:
        out << witness_line(std::string(to_string(e.code())), e.witness()) << "\n";
        return kWitness;
    }
  }
  return kOk;
}

int cmd_distributive(const Options& o, std::ostream& out) {
  const ActionPtr a = load_action_ptr(o.input);
  if (auto v = is_distributive(*a); !v) {
    out << witness_line("nondistributive", *v.witness) << "\n";
    return kWitness;
  }
  out << "distributive: true\n";
  return kOk;
}

/// The orbit partition, or a printed distributivity witness.
std::optional<OrbitPartition> partition_or_witness(const ActionPtr& a, std::ostream& out) {
  if (auto v = is_distributive(*a); !v) {
    out << witness_line("nondistributive", *v.witness) << "\n";
    return std::nullopt;
  }
  return orbit_partition(a);
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const auto p = partition_or_witness(load_action_ptr(o.input), out);
  if (!p) return kWitness;
  for (std::size_t k = 0; k < p->orbit_count(); ++k) out << "orbit " << k << ": " << set_text(p->block(k).members()) << "\n";
  return kOk;
}

int cmd_saturate(const Options& o, std::ostream& out) {
  const ActionPtr a = load_action_ptr(o.input);
  const std::size_t n = a->carrier_size();
  SubsetOfCarrier A;
  if (!o.subset_file.empty())
    A = load([&] { return io::load_subset(o.subset_file, n); });
  else
    A = load([&] { return SubsetOfCarrier(n, parse_point_list(o.subset_list)); });
  if (A.empty()) throw InputError("EmptyInput: cannot saturate the empty set");
  const Saturation s = saturate(*a, A);
  out << "saturation: " << set_text(s.set.members()) << "\n";
  out << "depth: " << s.depth << "\n";
  return kOk;
}

int cmd_sections(const Options& o, std::ostream& out) {
  const auto p = partition_or_witness(load_action_ptr(o.input), out);
  if (!p) return kWitness;
  out << "transversals: " << transversal_count(*p) << "\n";
  if (o.list) {
    const std::size_t limit = o.limit == 0 ? std::numeric_limits<std::size_t>::max() : o.limit;
    for (const auto& A : enumerate_transversals(*p, limit)) out << set_text(A.members()) << "\n";
  }
  return kOk;
}

int cmd_isotropy(const Options& o, std::ostream& out) {
  const ActionPtr a = load_action_ptr(o.input);
  const std::size_t n = a->carrier_size();
  if (o.x.has_value() != o.xp.has_value()) throw InputError("--x and --xp must be given together");
  auto print = [&](Point x, Point xp) {
    out << "isotropy (" << x << "," << xp << "): " << set_text(isotropy_group(*a, x, xp).members) << "\n";
  };
  if (o.x) {
    if (*o.x >= n || *o.xp >= n) throw InputError("IndexOutOfRange: isotropy pair outside carrier");
    print(*o.x, *o.xp);
    return kOk;
  }
  for (Point x = 0; x < n; ++x)
    for (Point xp = 0; xp < n; ++xp) print(x, xp);
  return kOk;
}

void print_map(const TotalEquivariantMap& f, std::ostream& out) {
  for (Point x : f.domain()) out << x << " -> " << f(x) << "\n";
}

int cmd_extend(const Options& o, std::ostream& out) {
  const std::string path = o.map_file.empty() ? o.input : o.map_file;
  if (path.empty()) throw InputError("extend needs --map <file>");
  const PartialEquivariantMap f = load([&] { return io::load_partial_map(path); });
  if (f.domain().empty()) throw InputError("EmptyInput: map has no pairs");

  if (o.engine == "section") {
    try {
      print_map(extend_from_section(f), out);
      return kOk;
    } catch (const Error& e) {
      const std::string kind = e.code() == Errc::StarConditionFailed ? "star" : std::string(to_string(e.code()));
      out << witness_line(kind, e.witness()) << "\n";
      return kWitness;
    }
  }

  StructuralExtension r = extend_structural(f);
  if (auto* map = std::get_if<TotalEquivariantMap>(&r)) {
    print_map(*map, out);
    return kOk;
  }
  const auto& c = std::get<ExtensionConflict>(r);
  const bool sm1 = c.kind == ExtensionConflict::Kind::Sm1Violation;
  out << witness_line(sm1 ? "sm1" : "conflict", {c.point, c.first_label, c.second_label}) << "\n";
  out << "derivation 1: " << derivation_text(c.first) << "\n";
  out << "derivation 2: " << derivation_text(c.second) << "\n";
  return kWitness;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.group = load([&] { return io::resolve_group_spec(o.group); });
  cfg.carrier_size = o.carrier;
  cfg.max_trials = o.max_trials;
  cfg.threads = o.threads;
  if (cfg.carrier_size == 0 || cfg.max_trials == 0) throw InputError("--carrier and --max-trials must be positive");

  try {
    if (o.kind == "nondistributive") {
      const auto w = find_nondistributive_witness(cfg);
      if (!o.output.empty()) io::write_text_file(o.output, io::action_to_json(w.action));
      out << witness_line("nondistributive", w.tuple) << " trial=" << w.trial << "\n";
    } else {
      const auto w = find_overlapping_orbits_witness(cfg);
      if (!o.output.empty()) io::write_text_file(o.output, io::action_to_json(w.action));
      const auto ox = orbit(w.action, w.x), oy = orbit(w.action, w.y);
      out << witness_line("overlapping-orbits", {w.x, w.y}) << " trial=" << w.trial << " orbit_x=" << set_text(ox.members())
          << " orbit_y=" << set_text(oy.members()) << "\n";
    }
  } catch (const Error& e) {
    if (e.code() != Errc::TrialsExhausted) throw;
    out << "no witness found after " << cfg.max_trials << " trials\n";
    return kOk;
  }
  return kWitness;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const GroupPtr G = load([&] { return io::resolve_group_spec(o.group); });
  const auto variant = o.variant == "conjugate" ? SelfActionVariant::Conjugate : SelfActionVariant::Distributive;
  out << io::action_to_json(canonical_self_action(G, variant));
  return kOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const auto p = partition_or_witness(load_action_ptr(o.input), out);
  if (!p) return kWitness;
  out << orbit_dot(*p);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite binary transformation groups: actions, orbits, sections, bi-equivariant extensions", "bispace"};
  app.require_subcommand(1);
  Options o;

  auto with_output = [&](CLI::App* sub) { sub->add_option("--output,-o", o.output, "Write the result to this file"); };
  auto with_action = [&](CLI::App* sub) {
    sub->add_option("action", o.input, "Action file")->required();
    with_output(sub);
  };

  std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers;

  auto* validate = app.add_subcommand("validate", "Validate a group, action or partial map file");
  validate->add_option("file", o.input, "JSON file")->required();
  with_output(validate);
  handlers[validate] = cmd_validate;

  auto* distributive = app.add_subcommand("distributive", "Check the distributivity law");
  with_action(distributive);
  handlers[distributive] = cmd_distributive;

  auto* orbits = app.add_subcommand("orbits", "Print the orbit partition of a distributive action");
  with_action(orbits);
  handlers[orbits] = cmd_orbits;

  auto* sat = app.add_subcommand("saturate", "Saturate a subset");
  with_action(sat);
  auto* subset_opt = sat->add_option("--subset", o.subset_file, "Subset file (JSON array)");
  sat->add_option("--set", o.subset_list, "Comma-separated points")->excludes(subset_opt);
  handlers[sat] = cmd_saturate;

  auto* sections = app.add_subcommand("sections", "Count or list transversals of the orbit partition");
  with_action(sections);
  sections->add_flag("--list", o.list, "List transversals");
  sections->add_option("--limit", o.limit, "List at most this many (0 = all)");
  handlers[sections] = cmd_sections;

  auto* isotropy = app.add_subcommand("isotropy", "Isotropy groups G_(x,x')");
  with_action(isotropy);
  isotropy->add_option("--x", o.x, "First point");
  isotropy->add_option("--xp", o.xp, "Second point");
  handlers[isotropy] = cmd_isotropy;

  auto* extend = app.add_subcommand("extend", "Extend a partial map bi-equivariantly");
  extend->add_option("--map", o.map_file, "Partial map file")->required();
  extend->add_option("--engine", o.engine, "structural | section")
      ->check(CLI::IsMember({"structural", "section"}));
  with_output(extend);
  handlers[extend] = cmd_extend;

  auto* search = app.add_subcommand("search", "Search for counterexample actions");
  search->add_option("--kind", o.kind, "nondistributive | overlapping-orbits")
      ->check(CLI::IsMember({"nondistributive", "overlapping-orbits"}));
  search->add_option("--group", o.group, "trivial | cyclic:k | klein4 | symmetric:k | group file")->required();
  search->add_option("--carrier", o.carrier, "Carrier size")->required();
  search->add_option("--seed", o.seed, "Seed");
  search->add_option("--max-trials", o.max_trials, "Trial budget");
  search->add_option("--threads", o.threads, "Worker threads");
  with_output(search);
  handlers[search] = cmd_search;

  auto* gen = app.add_subcommand("gen", "Generate a canonical self-action of a group");
  gen->add_option("--group", o.group, "trivial | cyclic:k | klein4 | symmetric:k | group file")->required();
  gen->add_option("--variant", o.variant, "distributive | conjugate")
      ->check(CLI::IsMember({"distributive", "conjugate"}));
  with_output(gen);
  handlers[gen] = cmd_gen;

  auto* dot = app.add_subcommand("export-dot", "Render the orbit partition as Graphviz DOT");
  with_action(dot);
  handlers[dot] = cmd_export_dot;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  // search writes its artifact to --output itself; its report always goes to out.
  const bool redirect = !o.output.empty() && chosen != search;
  std::ostringstream body;
  int code = kOk;
  try {
    code = handlers.at(chosen)(o, redirect ? body : out);
    if (redirect) io::write_text_file(o.output, body.str());
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace bispace::cli
