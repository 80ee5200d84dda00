#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace rotamap {

// Undirected graph with parallel edges and no loops. Vertices and edges are
// dense indices; labels are kept for export and for label-level comparison.
class MultiGraph {
 public:
  using Ends = std::array<std::size_t, 2>;

  MultiGraph() = default;
  MultiGraph(std::vector<std::string> vertex_labels,
             std::vector<std::string> edge_labels, std::vector<Ends> ends);

  std::size_t num_vertices() const noexcept { return vertex_labels_.size(); }
  std::size_t num_edges() const noexcept { return ends_.size(); }

  const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }
  const std::vector<std::string>& edge_labels() const noexcept { return edge_labels_; }
  const Ends& ends(std::size_t e) const { return ends_[e]; }
  const std::vector<Ends>& all_ends() const noexcept { return ends_; }

  // E(v): edges incident with v, ascending.
  const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_[v]; }
  bool incident(std::size_t v, std::size_t e) const;
  std::size_t other_end(std::size_t e, std::size_t v) const;

  // Distinct neighbours of v, ascending.
  std::vector<std::size_t> neighbours(std::size_t v) const;
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  std::size_t valency(std::size_t v) const { return neighbours(v).size(); }

  bool is_simple() const;
  bool is_connected() const;
  // Component index per vertex.
  std::vector<std::size_t> components() const;
  // Length of a shortest cycle of the underlying simple graph; 0 if acyclic.
  std::size_t simple_girth() const;

  // Labelled equality: same labels in the same order and the same ends.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_labels_ == b.vertex_labels_ &&
           a.edge_labels_ == b.edge_labels_ && a.ends_ == b.ends_;
  }

 private:
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
  std::vector<Ends> ends_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct IsoResult {
  bool isomorphic = false;
  std::vector<std::size_t> vertex_map;  // vertex of first graph -> second
  std::vector<std::size_t> edge_map;    // edge of first graph -> second
};

inline constexpr std::size_t kDefaultSearchBudget = 10000000;

// Backtracking search for an incidence-preserving bijection. Vertices are
// matched on (edge count, sorted multiplicity profile); parallel classes are
// paired afterwards. Throws SearchCapExceeded past `budget` search nodes.
IsoResult graph_isomorphic(const MultiGraph& g1, const MultiGraph& g2,
                           std::size_t budget = kDefaultSearchBudget);

// Replaces every edge with `lambda` parallel copies.
MultiGraph extender(const MultiGraph& base, std::size_t lambda);

}  // namespace rotamap
