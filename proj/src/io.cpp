#include "rotamap/io.hpp"

#include <map>
#include <sstream>

#include "rotamap/error.hpp"

namespace rotamap {

const Perm& GroupFile::get(const std::string& name) const {
  for (const auto& [key, p] : generators) {
    if (key == name) return p;
  }
  throw Error("UnknownName", "group file has no element named '" + name + "'");
}

std::vector<Perm> GroupFile::perms() const {
  std::vector<Perm> out;
  out.reserve(generators.size());
  for (const auto& [key, p] : generators) out.push_back(p);
  return out;
}

GroupFile parse_group_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("ParseError", std::string("group file: ") + e.what());
  }
  if (!doc.is_object()) throw Error("ParseError", "group file: top level must be an object");
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned()) {
    throw Error("ParseError", "group file: 'degree' must be a non-negative integer");
  }
  if (!doc.contains("generators") || !doc["generators"].is_object()) {
    throw Error("ParseError", "group file: 'generators' must be an object");
  }
  GroupFile out;
  out.degree = doc["degree"].get<std::size_t>();
  for (const auto& [name, value] : doc["generators"].items()) {
    const std::string where = "group file: generators." + name;
    if (!value.is_array()) throw Error("ParseError", where + " must be an array");
    std::vector<Point> images;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (!value[i].is_number_unsigned()) {
        throw Error("ParseError", where + "[" + std::to_string(i) + "] is not a point");
      }
      images.push_back(value[i].get<Point>());
    }
    if (images.size() != out.degree) {
      throw Error("ParseError", where + " has length " + std::to_string(images.size()) +
                                    ", expected " + std::to_string(out.degree));
    }
    try {
      out.generators.emplace_back(name, Perm(std::move(images)));
    } catch (const Error& e) {
      throw Error("ParseError", where + ": " + e.what());
    }
  }
  return out;
}

Json group_file_json(const GroupFile& file) {
  Json gens = Json::object();
  for (const auto& [name, p] : file.generators) gens[name] = p.images();
  return Json{{"degree", file.degree}, {"generators", gens}};
}

GroupFile group_file_from_entry(const CatalogEntry& entry) {
  GroupFile out;
  out.degree = entry.group.degree();
  for (const auto& [name, p] : entry.elements) out.generators.emplace_back(name, p);
  return out;
}

Json graph_json(const MultiGraph& graph) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    vertices.push_back({{"id", v}, {"label", graph.vertex_labels()[v]}});
  }
  Json edges = Json::array();
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    const auto ends = graph.ends(e);
    edges.push_back({{"id", e}, {"label", graph.edge_labels()[e]}, {"ends", Json::array({ends[0], ends[1]})}});
  }
  return Json{{"vertices", vertices}, {"edges", edges}};
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_edges(std::ostringstream& os, const MultiGraph& graph) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mult;
  for (std::size_t e = 0; e < graph.num_edges(); ++e) {
    auto ends = graph.ends(e);
    ++mult[{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])}];
  }
  for (const auto& [uv, count] : mult) {
    os << "  v" << uv.first << " -- v" << uv.second << " [multiplicity=" << count;
    if (count > 1) os << ", label=\"" << count << "\"";
    os << "];\n";
  }
}

}  // namespace

std::string graph_dot(const MultiGraph& graph, const std::string& name) {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    os << "  v" << v << " [label=" << dot_quote(graph.vertex_labels()[v]) << "];\n";
  }
  dot_edges(os, graph);
  os << "}\n";
  return os.str();
}

Json cycle_json(const CycleSeq& cycle) {
  return Json{{"edges", cycle.edges}, {"vertices", cycle.vertices}};
}

Json map_json(const CombMap& map) {
  Json out = graph_json(map.graph);
  Json faces = Json::array();
  for (std::size_t f = 0; f < map.faces.size(); ++f) {
    faces.push_back({{"id", f},
                     {"label", map.face_labels[f]},
                     {"boundary_edges", map.faces[f].edges},
                     {"boundary_vertices", map.faces[f].vertices}});
  }
  out["faces"] = faces;
  const SurfaceReport report = surface_check(map);
  out["chi"] = report.chi;
  out["orientable"] = orientability(map);
  out["construction"] = to_string(map.construction);
  if (!map.type_label.empty()) out["type"] = map.type_label;
  return out;
}

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error("ParseError", where + ": missing '" + key + "'");
  }
  return obj[key];
}

std::vector<std::size_t> index_list(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw Error("ParseError", where + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : arr) {
    if (!v.is_number_unsigned()) throw Error("ParseError", where + " holds a non-index");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

CombMap parse_map_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("ParseError", std::string("map: ") + e.what());
  }
  std::vector<std::string> vlabels, elabels;
  std::vector<MultiGraph::Ends> ends;
  const Json& vertices = field(doc, "vertices", "map");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Json& v = vertices[i];
    vlabels.push_back(v.is_object() && v.contains("label") ? v["label"].get<std::string>()
                                                            : std::to_string(i));
  }
  const Json& edges = field(doc, "edges", "map");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "map: edges[" + std::to_string(i) + "]";
    const auto e = index_list(field(edges[i], "ends", where), where + ".ends");
    if (e.size() != 2) throw Error("ParseError", where + ".ends must have two entries");
    if (e[0] >= vlabels.size() || e[1] >= vlabels.size()) {
      throw Error("ParseError", where + ".ends names a missing vertex");
    }
    ends.push_back({e[0], e[1]});
    elabels.push_back(edges[i].contains("label") ? edges[i]["label"].get<std::string>()
                                                 : std::to_string(i));
  }
  CombMap map;
  map.graph = MultiGraph(vlabels, elabels, ends);
  const Json& faces = field(doc, "faces", "map");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string where = "map: faces[" + std::to_string(i) + "]";
    auto edges_of = index_list(field(faces[i], "boundary_edges", where), where + ".boundary_edges");
    for (std::size_t e : edges_of) {
      if (e >= map.graph.num_edges()) throw Error("ParseError", where + " names a missing edge");
    }
    std::optional<std::size_t> start;
    if (faces[i].contains("boundary_vertices")) {
      auto vs = index_list(faces[i]["boundary_vertices"], where + ".boundary_vertices");
      if (!vs.empty()) start = vs.front();
    }
    map.faces.push_back(make_cycle(map.graph, std::move(edges_of), start));
    map.face_labels.push_back(faces[i].contains("label") ? faces[i]["label"].get<std::string>()
                                                         : std::to_string(i));
  }
  return map;
}

std::string map_dot(const CombMap& map) {
  std::ostringstream os;
  os << "graph \"map\" {\n";
  for (std::size_t v = 0; v < map.graph.num_vertices(); ++v) {
    os << "  v" << v << " [label=" << dot_quote(map.graph.vertex_labels()[v]) << "];\n";
  }
  dot_edges(os, map.graph);
  for (std::size_t f = 0; f < map.faces.size(); ++f) {
    os << "  // face " << f << ":";
    for (std::size_t e : map.faces[f].edges) os << ' ' << e;
    os << '\n';
  }
  os << "}\n";
  return os.str();
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", code}, {"message", message}};
}

}  // namespace rotamap
