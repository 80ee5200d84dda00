#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rotamap/group.hpp"
#include "rotamap/multigraph.hpp"

namespace rotamap {

struct GraphParams {
  std::size_t k = 0;       // valency |H:K|
  std::size_t lambda = 0;  // edge-multiplicity |K:H∩J|
  bool connected = false;
  Group K;  // H ∩ H^g
  Group L;  // K<g>
  Perm g;   // arc-reversing element of J \ H
};

// Cos(G,H,J): vertices [G:H], edges [G:J], with the group context kept so
// that elements of G can act on both.
struct CosetGraph {
  Group G, H, J;
  CosetSpace V, E;
  MultiGraph graph;
  GraphParams params;
};

// Label used for a coset representative in graphs and exports.
std::string coset_label(const Perm& rep);

// Throws NotASubgroup, HEqualsG or BadIndex on illegal input. When `g` is
// given it must lie in J \ H; otherwise the least such element is used.
CosetGraph build_coset_graph(const Group& G, const Group& H, const Group& J,
                             const std::optional<Perm>& g = std::nullopt);

// Cos(G,H,L) with L = K<g>; simple, and the input is its lambda-extender.
MultiGraph base_graph(const Group& G, const Group& H, const Group& J);

// Simple graph on [G:H] with Hx ~ Hy iff y x^-1 lies in HgH.
MultiGraph simp_cos(const Group& G, const Group& H, const Perm& g);

struct Extender {
  Group J;         // J' <= J
  std::size_t mu;  // |J:J'|
};

// Subgroups J' <= J not contained in H, each defining Cos(G,H,J') as a
// mu-extender of Cos(G,H,J). Sorted by decreasing mu. Requires |J| <= 256.
std::vector<Extender> mu_extenders(const Group& G, const Group& H, const Group& J);

// Permutation group on V ∪ E induced by G: points 0..|V|-1 are vertices,
// |V|.. are edges.
Group induced_action(const CosetGraph& cg);

struct CoreQuotient {
  Group M;          // Core_G(H ∩ J)
  Group quotient;   // faithful action of G/M on V ∪ E
  CosetGraph graph; // Cos(quotient, vertex stabiliser, edge stabiliser)
};

CoreQuotient quotient_core(const Group& G, const Group& H, const Group& J);

struct CosetRep {
  Group H;  // stabiliser of the vertex
  Group J;  // stabiliser of the edge
};

// G must act on V ∪ E of `graph` (same point layout as induced_action),
// preserve incidence and be transitive on arcs. Throws NotArcTransitive.
CosetRep recover_coset_rep(const Group& G, const MultiGraph& graph,
                           std::size_t vertex, std::size_t edge);

// Elements of G fixing every edge of Cos(G,H,J).
Group edge_kernel(const CosetGraph& cg);

}  // namespace rotamap
