#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rotamap/catalog.hpp"
#include "rotamap/maps.hpp"

namespace rotamap {

using Json = nlohmann::ordered_json;

// {"degree": d, "generators": {"<name>": [img0, img1, ...], ...}}
struct GroupFile {
  std::size_t degree = 0;
  std::vector<std::pair<std::string, Perm>> generators;  // file order

  // Throws UnknownName.
  const Perm& get(const std::string& name) const;
  std::vector<Perm> perms() const;
};

// Throws ParseError naming the offending key or position.
GroupFile parse_group_file(const std::string& text);
Json group_file_json(const GroupFile& file);
GroupFile group_file_from_entry(const CatalogEntry& entry);

Json graph_json(const MultiGraph& graph);
// Parallel edges are collapsed into one DOT edge carrying a multiplicity.
std::string graph_dot(const MultiGraph& graph, const std::string& name = "G");

Json cycle_json(const CycleSeq& cycle);
Json map_json(const CombMap& map);
// Reads the graph and faces of a map export; other keys are ignored.
// Throws ParseError, BadGraph or BadCycle.
CombMap parse_map_json(const std::string& text);
std::string map_dot(const CombMap& map);

Json error_json(const std::string& code, const std::string& message);

}  // namespace rotamap
