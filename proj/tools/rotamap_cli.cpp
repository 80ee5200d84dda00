#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotamap/catalog.hpp"
#include "rotamap/error.hpp"
#include "rotamap/io.hpp"
#include "rotamap/maps.hpp"
#include "rotamap/verify.hpp"

using namespace rotamap;

namespace {

struct Options {
  std::string group_path = "-";
  std::string map_path = "-";
  std::string H, J, g;
  std::string pair, triple;
  std::string of = "rotamap";
  std::string format = "json";
  std::string verify_format = "text";
  std::size_t cap = 0;
  std::string entry, suite;
  std::size_t n = 3, lambda = 1;
};

std::string read_input(const std::string& path, const std::string& what) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + what + " '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

struct Loaded {
  GroupFile file;
  Group G;
};

Loaded load_group(const Options& o) {
  Loaded l{parse_group_file(read_input(o.group_path, "group file")), Group()};
  l.G = Group(l.file.degree, l.file.perms(), o.cap);
  return l;
}

Group subgroup_of(const Loaded& l, const std::string& names, const Options& o) {
  std::vector<Perm> gens;
  for (const auto& name : split_names(names)) gens.push_back(l.file.get(name));
  return Group(l.file.degree, gens, o.cap);
}

std::vector<Perm> named(const Loaded& l, const std::string& list, std::size_t count,
                        const char* flag) {
  const auto names = split_names(list);
  if (names.size() != count) {
    throw Error("ParseError", std::string(flag) + " expects " + std::to_string(count) +
                                  " comma-separated names, got '" + list + "'");
  }
  std::vector<Perm> out;
  for (const auto& n : names) out.push_back(l.file.get(n));
  return out;
}

Json params_json(const GraphParams& p, const CosetGraph& cg) {
  return Json{{"vertices", cg.graph.num_vertices()},
              {"edges", cg.graph.num_edges()},
              {"k", p.k},
              {"lambda", p.lambda},
              {"connected", p.connected},
              {"edges_formula", cg.graph.num_vertices() * p.k * p.lambda / 2},
              {"K_order", p.K.order()},
              {"L_order", p.L.order()},
              {"g", p.g.to_cycles()}};
}

Json rotary_json(const RotaryPair& rp) {
  return Json{{"group_order", rp.G.order()}, {"k", rp.k},         {"lambda", rp.lambda},
              {"m", rp.m},                   {"ell", rp.ell},     {"lambda_p", rp.lambda_p},
              {"lambda_pp", rp.lambda_pp}};
}

void emit(const Options& o, const Json& j, const std::string& dot) {
  if (o.format == "dot") {
    std::cout << dot;
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void emit_map(const Options& o, const CombMap& m, Json extra) {
  Json j = map_json(m);
  const MapKernels k = map_kernels(m);
  j["circular"] = k.circular;
  j["flags"] = surface_check(m).flags;
  for (auto& [key, value] : extra.items()) j[key] = value;
  emit(o, j, map_dot(m));
}

CombMap construct(const Loaded& l, const Options& o, std::optional<RotaryPair>& rp) {
  if (o.of == "regmap") {
    const auto t = named(l, o.triple, 3, "--triple");
    return reg_map(validate_flag_regular_triple(t[0], t[1], t[2]));
  }
  const auto p = named(l, o.pair, 2, "--pair");
  rp = validate_rotary_pair(p[0], p[1]);
  if (o.of == "rotamap") return rota_map(*rp);
  if (o.of == "biromap") return biro_map(*rp);
  throw Error("UnknownName", "--of must be rotamap, biromap or regmap");
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "build-graph") {
    const Loaded l = load_group(o);
    std::optional<Perm> g;
    if (!o.g.empty()) g = l.file.get(o.g);
    const CosetGraph cg =
        build_coset_graph(l.G, subgroup_of(l, o.H, o), subgroup_of(l, o.J, o), g);
    Json j = graph_json(cg.graph);
    j["params"] = params_json(cg.params, cg);
    emit(o, j, graph_dot(cg.graph, "Cos"));
  } else if (cmd == "base-graph") {
    const Loaded l = load_group(o);
    const MultiGraph b = base_graph(l.G, subgroup_of(l, o.H, o), subgroup_of(l, o.J, o));
    emit(o, graph_json(b), graph_dot(b, "Base"));
  } else if (cmd == "extenders") {
    const Loaded l = load_group(o);
    const Group H = subgroup_of(l, o.H, o);
    const Group J = subgroup_of(l, o.J, o);
    Json list = Json::array();
    for (const Extender& e : mu_extenders(l.G, H, J)) {
      Json gens = Json::array();
      for (const Perm& p : e.J.generators()) gens.push_back(p.to_cycles());
      list.push_back({{"mu", e.mu}, {"order", e.J.order()}, {"generators", gens}});
    }
    std::cout << Json{{"extenders", list}}.dump(2) << '\n';
  } else if (cmd == "rotamap" || cmd == "biromap") {
    const Loaded l = load_group(o);
    const auto p = named(l, o.pair, 2, "--pair");
    const RotaryPair rp = validate_rotary_pair(p[0], p[1]);
    emit_map(o, cmd == "rotamap" ? rota_map(rp) : biro_map(rp), Json{{"params", rotary_json(rp)}});
  } else if (cmd == "regmap") {
    const Loaded l = load_group(o);
    const auto t = named(l, o.triple, 3, "--triple");
    const FlagRegularTriple tr = validate_flag_regular_triple(t[0], t[1], t[2]);
    emit_map(o, reg_map(tr),
             Json{{"params", {{"group_order", tr.G.order()}, {"k", tr.k}, {"lambda", tr.lambda},
                              {"m", tr.m}, {"lambda_p", tr.lambda_p}}}});
  } else if (cmd == "classify") {
    const Loaded l = load_group(o);
    std::optional<RotaryPair> built;
    const CombMap m = construct(l, o, built);
    const auto p = named(l, o.pair, 2, "--pair");
    const RotaryPair rp = built ? *built : validate_rotary_pair(p[0], p[1]);
    const Classification c = classify_vertex_rotary(m, rp);
    std::cout << Json{{"kind", to_string(c.kind)},
                      {"faces", {c.faces[0], c.faces[1]}},
                      {"type", c.kind == MapKind::Rotary ? "2^Pex" : "2*ex"}}
                     .dump(2)
              << '\n';
  } else if (cmd == "check") {
    const CombMap m = parse_map_json(read_input(o.map_path, "map file"));
    const SurfaceReport r = surface_check(m);
    bool regular = true;
    for (const CycleSeq& f : m.faces) {
      regular = regular && classify_induced(f).tag != CycleKind::NotRegular &&
                classify_induced(f) == classify_induced(m.faces.front());
    }
    std::cout << Json{{"surface", true},
                      {"vertices", m.graph.num_vertices()},
                      {"edges", m.graph.num_edges()},
                      {"faces", m.num_faces()},
                      {"flags", r.flags},
                      {"chi", r.chi},
                      {"orientable", orientability(m)},
                      {"regular_boundaries", regular},
                      {"boundary_kind", to_string(classify_induced(m.faces.front()))}}
                     .dump(2)
              << '\n';
  } else if (cmd == "catalog") {
    std::cout << group_file_json(group_file_from_entry(catalog_entry(o.entry, o.n, o.lambda)))
                     .dump(1)
              << '\n';
  } else if (cmd == "verify") {
    std::vector<std::string> suites;
    if (o.suite == "all") {
      suites = suite_names();
    } else {
      suites.push_back(o.suite);
    }
    bool ok = true;
    Json out = Json::array();
    for (const auto& name : suites) {
      for (const CheckResult& r : run_suite(name)) {
        ok = ok && r.status != CheckStatus::Fail;
        if (o.verify_format == "json") {
          out.push_back({{"suite", name}, {"key", r.key}, {"status", to_string(r.status)},
                         {"detail", r.detail}});
        } else {
          std::cout << to_string(r.status) << "  " << name << '/' << r.key;
          if (!r.detail.empty()) std::cout << "  " << r.detail;
          std::cout << '\n';
        }
      }
    }
    if (o.verify_format == "json") std::cout << out.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset graphs with multiple edges and their vertex-rotary maps"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group_path, "Group file (JSON); '-' reads stdin");
    sub->add_option("--cap", o.cap, "Group-size cap (also settable through ROTAMAP_CAP)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "dot"}));
  };

  for (const char* name : {"build-graph", "base-graph", "extenders"}) {
    auto* sub = app.add_subcommand(name, std::string("Coset graph command: ") + name);
    add_group(sub);
    sub->add_option("--H", o.H, "Generators of H, comma-separated names")->required();
    sub->add_option("--J", o.J, "Generators of J, comma-separated names")->required();
    if (std::string(name) == "build-graph") {
      sub->add_option("--g", o.g, "Name of the arc-reversing element of J \\ H");
    }
    if (std::string(name) != "extenders") add_format(sub);
  }
  for (const char* name : {"rotamap", "biromap"}) {
    auto* sub = app.add_subcommand(name, std::string("Build ") + name + " from a rotary pair");
    add_group(sub);
    add_format(sub);
    sub->add_option("--pair", o.pair, "Rotary pair a,z")->required();
  }
  {
    auto* sub = app.add_subcommand("regmap", "Build the map of a flag-regular triple");
    add_group(sub);
    add_format(sub);
    sub->add_option("--triple", o.triple, "Flag-regular triple x,y,z")->required();
  }
  {
    auto* sub = app.add_subcommand("classify", "Classify a vertex-rotary map against a pair");
    add_group(sub);
    sub->add_option("--pair", o.pair, "Rotary pair a,z")->required();
    sub->add_option("--triple", o.triple, "Flag-regular triple x,y,z (for --of regmap)");
    sub->add_option("--of", o.of, "Map to classify")
        ->check(CLI::IsMember({"rotamap", "biromap", "regmap"}));
  }
  {
    auto* sub = app.add_subcommand("check", "Surface certificate of an exported map");
    sub->add_option("--map", o.map_path, "Map JSON; '-' reads stdin");
  }
  {
    auto* sub = app.add_subcommand("catalog", "Emit a catalog entry as a group file");
    sub->add_option("entry", o.entry, "Entry name")
        ->required()
        ->check(CLI::IsMember(catalog_names()));
    sub->add_option("--n", o.n, "Parameter n");
    sub->add_option("--lambda", o.lambda, "Parameter lambda");
  }
  {
    auto* sub = app.add_subcommand("verify", "Run a named verification suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    sub->add_option("suite", o.suite, "Suite name or 'all'")
        ->required()
        ->check(CLI::IsMember(names));
    sub->add_option("--format", o.verify_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("ParseError", e.what()).dump() << '\n';
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (o.cap != 0) {
    setenv("ROTAMAP_CAP", std::to_string(o.cap).c_str(), 1);
  } else {
    o.cap = default_cap();
  }
  try {
    return run(cmd, o);
  } catch (const Error& e) {
    std::cerr << error_json(e.code(), e.what()).dump() << '\n';
    return 2;
  }
}
