#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "rotamap/cosetgraph.hpp"
#include "rotamap/error.hpp"
#include "rotamap/group.hpp"
#include "rotamap/maps.hpp"

namespace testing_support {

inline oracle::P raw(const rotamap::Perm& p) { return p.images(); }

inline oracle::Set raw_set(const rotamap::Group& G) {
  oracle::Set s;
  for (const auto& g : G.elements()) s.insert(g.images());
  return s;
}

inline std::vector<oracle::P> raw_gens(const rotamap::Group& G) {
  std::vector<oracle::P> out;
  for (const auto& g : G.generators()) out.push_back(g.images());
  return out;
}

inline rotamap::Perm cyc(const char* text, std::size_t degree) {
  return rotamap::Perm::parse_cycles(text, degree);
}

inline rotamap::Group sym(std::size_t n) {
  std::vector<rotamap::Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<rotamap::Point>((i + 1) % n);
  return rotamap::Group(n, {rotamap::Perm(shift), rotamap::Perm::from_cycles(n, {{0, 1}})});
}

// D_{2n} x Z_m on n + m points.
inline rotamap::Group dihedral_times_cyclic(std::size_t n, std::size_t m) {
  const std::size_t d = n + m;
  std::vector<rotamap::Point> r(d), s(d), c(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = s[i] = c[i] = static_cast<rotamap::Point>(i);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<rotamap::Point>((i + 1) % n);
    s[i] = static_cast<rotamap::Point>((n - i) % n);
  }
  for (std::size_t j = 0; j < m; ++j) c[n + j] = static_cast<rotamap::Point>(n + (j + 1) % m);
  return rotamap::Group(d, {rotamap::Perm(r), rotamap::Perm(s), rotamap::Perm(c)});
}

inline oracle::MapData map_data(const rotamap::CombMap& M) {
  oracle::MapData d;
  d.vertices = M.graph.num_vertices();
  for (const auto& e : M.graph.all_ends()) d.ends.emplace_back(e[0], e[1]);
  for (const auto& f : M.faces) {
    d.face_edges.push_back(f.edges);
    d.face_vertices.push_back(f.vertices);
  }
  return d;
}

inline oracle::Mult mult_matrix(const rotamap::MultiGraph& g) {
  oracle::Mult m(g.num_vertices(), std::vector<std::size_t>(g.num_vertices(), 0));
  for (const auto& e : g.all_ends()) {
    ++m[e[0]][e[1]];
    ++m[e[1]][e[0]];
  }
  return m;
}

// The returned bijections really preserve incidence.
inline bool certifies(const rotamap::MultiGraph& g1, const rotamap::MultiGraph& g2,
                      const rotamap::IsoResult& r) {
  if (!r.isomorphic || r.vertex_map.size() != g1.num_vertices() ||
      r.edge_map.size() != g1.num_edges() || g1.num_edges() != g2.num_edges()) {
    return false;
  }
  std::vector<bool> hitv(g2.num_vertices(), false), hite(g2.num_edges(), false);
  for (auto v : r.vertex_map) {
    if (v >= hitv.size() || hitv[v]) return false;
    hitv[v] = true;
  }
  for (std::size_t e = 0; e < g1.num_edges(); ++e) {
    const std::size_t f = r.edge_map[e];
    if (f >= hite.size() || hite[f]) return false;
    hite[f] = true;
    auto a = g1.ends(e);
    auto b = g2.ends(f);
    const std::size_t x = r.vertex_map[a[0]], y = r.vertex_map[a[1]];
    if (!((x == b[0] && y == b[1]) || (x == b[1] && y == b[0]))) return false;
  }
  return true;
}

// Error code thrown by f, or empty when it returns normally.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const rotamap::Error& e) {
    return e.code();
  }
  return {};
}

// The library graph equals the oracle's intersection-incidence graph once
// each vertex is matched to the oracle coset containing its representative.
inline bool matches_oracle(const rotamap::CosetGraph& cg) {
  const auto G = raw_set(cg.G);
  const auto cosets = oracle::right_cosets(G, raw_set(cg.H));
  if (cosets.size() != cg.V.size()) return false;
  const oracle::Mult want = oracle::coset_graph(G, raw_set(cg.H), raw_set(cg.J));
  std::vector<std::size_t> to(cg.V.size());
  for (std::size_t i = 0; i < cg.V.size(); ++i) {
    to[i] = oracle::coset_containing(cosets, raw(cg.V.rep(i)));
  }
  const oracle::Mult got = mult_matrix(cg.graph);
  for (std::size_t i = 0; i < got.size(); ++i) {
    for (std::size_t j = 0; j < got.size(); ++j) {
      if (got[i][j] != want[to[i]][to[j]]) return false;
    }
  }
  return true;
}

}  // namespace testing_support
