#include "rotamap/cosetgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "rotamap/error.hpp"

namespace rotamap {

std::string coset_label(const Perm& rep) { return rep.to_cycles(); }

namespace {

// Checks the legality conditions and returns H ∩ J.
Group check_triple(const Group& G, const Group& H, const Group& J) {
  if (!H.is_subgroup_of(G)) throw Error("NotASubgroup", "H is not a subgroup of G");
  if (!J.is_subgroup_of(G)) throw Error("NotASubgroup", "J is not a subgroup of G");
  if (H.order() == G.order()) throw Error("HEqualsG", "H must be a proper subgroup of G");
  Group HJ = intersect(H, J);
  if (J.order() != 2 * HJ.order()) {
    throw Error("BadIndex", "|J : H∩J| = " + std::to_string(J.order()) + "/" +
                                std::to_string(HJ.order()) + ", expected 2");
  }
  return HJ;
}

Perm least_outside(const Group& J, const Group& H) {
  std::vector<Perm> outside;
  for (const Perm& p : J.elements()) {
    if (!H.contains(p)) outside.push_back(p);
  }
  return *std::min_element(outside.begin(), outside.end());
}

std::vector<std::string> labels_of(const CosetSpace& cs) {
  std::vector<std::string> out;
  out.reserve(cs.size());
  for (const Perm& r : cs.reps()) out.push_back(coset_label(r));
  return out;
}

}  // namespace

CosetGraph build_coset_graph(const Group& G, const Group& H, const Group& J,
                             const std::optional<Perm>& g_in) {
  Group HJ = check_triple(G, H, J);
  Perm g;
  if (g_in) {
    if (!J.contains(*g_in) || H.contains(*g_in)) {
      throw Error("BadArcReverser", "g must lie in J but not in H");
    }
    g = *g_in;
  } else {
    g = least_outside(J, H);
  }

  CosetSpace V(G, H), E(G, J);
  std::vector<MultiGraph::Ends> ends;
  ends.reserve(E.size());
  for (const Perm& y : E.reps()) {
    ends.push_back({V.index_of(y), V.index_of(g * y)});
  }
  MultiGraph graph(labels_of(V), labels_of(E), std::move(ends));

  GraphParams params;
  params.g = g;
  params.K = intersect(H, conjugate(H, g));
  std::vector<Perm> lgens = params.K.generators();
  lgens.push_back(g);
  params.L = Group(G.degree(), lgens);
  params.k = H.order() / params.K.order();
  params.lambda = params.K.order() / HJ.order();
  params.connected = graph.is_connected();

  return CosetGraph{G, H, J, std::move(V), std::move(E), std::move(graph),
                    std::move(params)};
}

MultiGraph base_graph(const Group& G, const Group& H, const Group& J) {
  CosetGraph cg = build_coset_graph(G, H, J);
  return build_coset_graph(G, H, cg.params.L).graph;
}

MultiGraph simp_cos(const Group& G, const Group& H, const Perm& g) {
  if (!G.contains(g)) throw Error("NotASubgroup", "g is not an element of G");
  if (H.contains(g)) throw Error("GInH", "g must not lie in H");
  CosetSpace V(G, H);

  std::unordered_set<Perm, PermHash> dc;
  for (const Perm& h1 : H.elements()) {
    Perm h1g = h1 * g;
    for (const Perm& h2 : H.elements()) dc.insert(h1g * h2);
  }

  std::vector<std::set<std::size_t>> adj(V.size());
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (const Perm& d : dc) adj[i].insert(V.index_of(d * V.rep(i)));
  }
  std::vector<MultiGraph::Ends> ends;
  std::vector<std::string> edge_labels;
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j : adj[i]) {
      if (!adj[j].count(i)) {
        throw Error("NotSymmetric", "HgH is not closed under inversion");
      }
      if (i < j) {
        ends.push_back({i, j});
        edge_labels.push_back(std::to_string(i) + "-" + std::to_string(j));
      }
    }
  }
  return MultiGraph(labels_of(V), std::move(edge_labels), std::move(ends));
}

std::vector<Extender> mu_extenders(const Group& G, const Group& H, const Group& J) {
  check_triple(G, H, J);
  if (J.order() > 256) {
    throw Error("TooLarge", "mu_extenders requires |J| <= 256");
  }
  std::vector<Extender> out;
  for (const Group& sub : all_subgroups(J, 256)) {
    bool leaves_h = std::any_of(sub.elements().begin(), sub.elements().end(),
                                [&](const Perm& p) { return !H.contains(p); });
    if (leaves_h) out.push_back({sub, J.order() / sub.order()});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Extender& a, const Extender& b) { return a.mu > b.mu; });
  return out;
}

Group induced_action(const CosetGraph& cg) {
  const std::size_t nv = cg.V.size();
  const std::size_t ne = cg.E.size();
  std::vector<Perm> gens;
  for (const Perm& s : cg.G.generators()) {
    std::vector<Point> images(nv + ne);
    for (std::size_t v = 0; v < nv; ++v) images[v] = static_cast<Point>(cg.V.act(v, s));
    for (std::size_t e = 0; e < ne; ++e) {
      images[nv + e] = static_cast<Point>(nv + cg.E.act(e, s));
    }
    gens.emplace_back(std::move(images));
  }
  return Group(nv + ne, gens);
}

CoreQuotient quotient_core(const Group& G, const Group& H, const Group& J) {
  CosetGraph cg = build_coset_graph(G, H, J);
  Group M = core(G, intersect(H, J));
  Group Q = induced_action(cg);
  if (Q.order() * M.order() != G.order()) {
    throw Error("CrossCheckFailed", "induced action order differs from |G|/|M|");
  }
  const std::size_t nv = cg.V.size();
  // Coset 0 is H itself and edge 0 is J itself: the identity is the least
  // element of every coset that contains it.
  Group Hq = point_stabilizer(Q, 0);
  Group Jq = point_stabilizer(Q, static_cast<Point>(nv));
  CosetGraph qg = build_coset_graph(Q, Hq, Jq);
  return CoreQuotient{std::move(M), std::move(Q), std::move(qg)};
}

CosetRep recover_coset_rep(const Group& G, const MultiGraph& graph,
                           std::size_t vertex, std::size_t edge) {
  const std::size_t nv = graph.num_vertices();
  const std::size_t ne = graph.num_edges();
  if (G.degree() != nv + ne) {
    throw Error("DegreeMismatch", "group must act on the vertices and edges");
  }
  if (!graph.incident(vertex, edge)) {
    throw Error("NotIncident", "base vertex is not incident with base edge");
  }
  for (const Perm& s : G.generators()) {
    for (std::size_t e = 0; e < ne; ++e) {
      Point img = s[nv + e];
      if (img < nv) throw Error("NotArcTransitive", "group maps an edge to a vertex");
      auto [u, v] = graph.ends(e);
      auto target = graph.ends(img - nv);
      std::array<std::size_t, 2> moved{s[u], s[v]};
      std::sort(moved.begin(), moved.end());
      std::sort(target.begin(), target.end());
      if (moved != target) {
        throw Error("NotArcTransitive", "group does not preserve incidence");
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> orbit{{vertex, edge}};
  std::deque<std::pair<std::size_t, std::size_t>> queue{{vertex, edge}};
  while (!queue.empty()) {
    auto [v, e] = queue.front();
    queue.pop_front();
    for (const Perm& s : G.generators()) {
      std::pair<std::size_t, std::size_t> next{s[v], s[nv + e] - nv};
      if (orbit.insert(next).second) queue.push_back(next);
    }
  }
  if (orbit.size() != 2 * ne) {
    throw Error("NotArcTransitive", "arc orbit has size " + std::to_string(orbit.size()) +
                                        ", expected " + std::to_string(2 * ne));
  }
  return CosetRep{point_stabilizer(G, static_cast<Point>(vertex)),
                  point_stabilizer(G, static_cast<Point>(nv + edge))};
}

Group edge_kernel(const CosetGraph& cg) { return action_kernel(cg.G, cg.J); }

}  // namespace rotamap
