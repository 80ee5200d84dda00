#include "rotamap/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rotamap/error.hpp"

namespace rotamap {

MultiGraph::MultiGraph(std::vector<std::string> vertex_labels,
                       std::vector<std::string> edge_labels, std::vector<Ends> ends)
    : vertex_labels_(std::move(vertex_labels)),
      edge_labels_(std::move(edge_labels)),
      ends_(std::move(ends)) {
  if (edge_labels_.size() != ends_.size()) {
    throw Error("BadGraph", "edge label count differs from edge count");
  }
  incident_.assign(vertex_labels_.size(), {});
  for (std::size_t e = 0; e < ends_.size(); ++e) {
    const auto& [u, v] = ends_[e];
    if (u >= vertex_labels_.size() || v >= vertex_labels_.size()) {
      throw Error("BadGraph", "edge " + std::to_string(e) + " has an unknown end");
    }
    if (u == v) {
      throw Error("BadGraph", "edge " + std::to_string(e) + " is a loop");
    }
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
}

bool MultiGraph::incident(std::size_t v, std::size_t e) const {
  return ends_[e][0] == v || ends_[e][1] == v;
}

std::size_t MultiGraph::other_end(std::size_t e, std::size_t v) const {
  if (ends_[e][0] == v) return ends_[e][1];
  if (ends_[e][1] == v) return ends_[e][0];
  throw Error("BadGraph", "vertex " + std::to_string(v) +
                              " is not incident with edge " + std::to_string(e));
}

std::vector<std::size_t> MultiGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e : incident_[v]) out.push_back(other_end(e, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t MultiGraph::multiplicity(std::size_t u, std::size_t v) const {
  std::size_t count = 0;
  for (std::size_t e : incident_[u]) {
    if (other_end(e, u) == v) ++count;
  }
  return count;
}

bool MultiGraph::is_simple() const {
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    if (neighbours(v).size() != incident_[v].size()) return false;
  }
  return true;
}

std::vector<std::size_t> MultiGraph::components() const {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(num_vertices(), unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < num_vertices(); ++s) {
    if (comp[s] != unset) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = next;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : incident_[v]) {
        std::size_t w = other_end(e, v);
        if (comp[w] == unset) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool MultiGraph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

std::size_t MultiGraph::simple_girth() const {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::size_t best = 0;
  for (std::size_t s = 0; s < num_vertices(); ++s) {
    std::vector<std::size_t> dist(num_vertices(), unset), parent(num_vertices(), unset);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : neighbours(v)) {
        if (dist[w] == unset) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          std::size_t len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

struct Profile {
  std::size_t edge_count;
  std::vector<std::size_t> multiplicities;
  auto operator<=>(const Profile&) const = default;
};

Profile profile(const MultiGraph& g, std::size_t v) {
  Profile p{g.incident_edges(v).size(), {}};
  for (std::size_t w : g.neighbours(v)) p.multiplicities.push_back(g.multiplicity(v, w));
  std::sort(p.multiplicities.begin(), p.multiplicities.end());
  return p;
}

std::vector<std::size_t> multiplicity_matrix(const MultiGraph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> m(n * n, 0);
  for (const auto& [u, v] : g.all_ends()) {
    ++m[u * n + v];
    ++m[v * n + u];
  }
  return m;
}

}  // namespace

IsoResult graph_isomorphic(const MultiGraph& g1, const MultiGraph& g2,
                           std::size_t budget) {
  IsoResult result;
  const std::size_t n = g1.num_vertices();
  if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return result;

  std::vector<Profile> p1(n), p2(n);
  for (std::size_t v = 0; v < n; ++v) {
    p1[v] = profile(g1, v);
    p2[v] = profile(g2, v);
  }
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return result;
  }

  // Profile frequency drives the choice of component roots.
  std::map<Profile, std::size_t> freq;
  for (const auto& p : p1) ++freq[p];

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order, parent(n, unset);
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    std::size_t root = unset;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (root == unset || freq[p1[v]] < freq[p1[root]]) root = v;
    }
    std::deque<std::size_t> queue{root};
    placed[root] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w : g1.neighbours(v)) {
        if (!placed[w]) {
          placed[w] = true;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }

  const auto m1 = multiplicity_matrix(g1);
  const auto m2 = multiplicity_matrix(g2);
  std::vector<std::size_t> phi(n, unset);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;

  std::vector<std::vector<std::size_t>> candidates(n);
  std::vector<std::size_t> cursor(n, 0);
  auto fill_candidates = [&](std::size_t depth) {
    std::size_t v = order[depth];
    auto& c = candidates[depth];
    c.clear();
    if (parent[v] != unset) {
      for (std::size_t w : g2.neighbours(phi[parent[v]])) {
        if (!used[w] && p2[w] == p1[v]) c.push_back(w);
      }
    } else {
      for (std::size_t w = 0; w < n; ++w) {
        if (!used[w] && p2[w] == p1[v]) c.push_back(w);
      }
    }
    cursor[depth] = 0;
  };
  auto consistent = [&](std::size_t depth, std::size_t w) {
    std::size_t v = order[depth];
    for (std::size_t d = 0; d < depth; ++d) {
      std::size_t u = order[d];
      if (m1[v * n + u] != m2[w * n + phi[u]]) return false;
    }
    return true;
  };

  std::size_t depth = 0;
  if (n > 0) fill_candidates(0);
  while (n > 0) {
    if (depth == n) break;
    bool advanced = false;
    while (cursor[depth] < candidates[depth].size()) {
      std::size_t w = candidates[depth][cursor[depth]++];
      if (++nodes > budget) {
        throw Error("SearchCapExceeded", "isomorphism search exceeded " +
                                             std::to_string(budget) + " nodes");
      }
      if (!consistent(depth, w)) continue;
      phi[order[depth]] = w;
      used[w] = true;
      ++depth;
      if (depth < n) fill_candidates(depth);
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return result;
    --depth;
    used[phi[order[depth]]] = false;
    phi[order[depth]] = unset;
  }

  // Pair the parallel classes edge by edge.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> classes;
  for (std::size_t e = 0; e < g2.num_edges(); ++e) {
    auto [u, v] = g2.ends(e);
    classes[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> taken;
  result.edge_map.resize(g1.num_edges());
  for (std::size_t e = 0; e < g1.num_edges(); ++e) {
    auto [u, v] = g1.ends(e);
    std::pair<std::size_t, std::size_t> key{std::min(phi[u], phi[v]), std::max(phi[u], phi[v])};
    result.edge_map[e] = classes.at(key)[taken[key]++];
  }
  result.vertex_map = std::move(phi);
  result.isomorphic = true;
  return result;
}

MultiGraph extender(const MultiGraph& base, std::size_t lambda) {
  std::vector<std::string> labels;
  std::vector<MultiGraph::Ends> ends;
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    for (std::size_t i = 0; i < lambda; ++i) {
      labels.push_back(base.edge_labels()[e] + "#" + std::to_string(i));
      ends.push_back(base.ends(e));
    }
  }
  return MultiGraph(base.vertex_labels(), labels, ends);
}

}  // namespace rotamap
