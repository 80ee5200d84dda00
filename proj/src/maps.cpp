#include "rotamap/maps.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>

#include "rotamap/error.hpp"

namespace rotamap {

std::string to_string(MapConstruction c) {
  switch (c) {
    case MapConstruction::RotaMap: return "RotaMap";
    case MapConstruction::BiRoMap: return "BiRoMap";
    case MapConstruction::RegMap: return "RegMap";
    case MapConstruction::Custom: return "Custom";
  }
  return "?";
}

std::string to_string(MapKind kind) {
  return kind == MapKind::Rotary ? "Rotary" : "BiRotary";
}

namespace {

using EdgeWalk = std::function<std::vector<std::size_t>(const Perm&)>;
using StartVertex = std::function<std::optional<std::size_t>(const Perm&)>;

// One face per coset of `stabiliser`, with boundary produced from the
// coset representative.
CombMap assemble(std::shared_ptr<const CosetGraph> cg, const Group& stabiliser,
                 const EdgeWalk& walk, const StartVertex& start) {
  CosetSpace F(cg->G, stabiliser);
  if (F.size() < 3) {
    throw Error("FewFaces", "map would have " + std::to_string(F.size()) + " faces");
  }
  CombMap M;
  M.graph = cg->graph;
  for (const Perm& g : F.reps()) {
    M.face_labels.push_back(coset_label(g));
    M.faces.push_back(make_cycle(cg->graph, walk(g), start(g)));
  }
  M.context = std::move(cg);
  return M;
}

void require_general(const RotaryPair& rp) {
  if (degenerate_class(rp).kind != DegenerateKind::General) {
    throw Error("DegenerateGraph", "underlying graph is " +
                                       to_string(degenerate_class(rp).kind));
  }
}

}  // namespace

CombMap rota_map(const RotaryPair& rp) {
  require_general(rp);
  auto cg = std::make_shared<const CosetGraph>(vertex_rotary_graph(rp));
  const Perm c = rp.a * rp.z;
  const std::size_t m = rp.m;
  CombMap M = assemble(
      cg, cyclic(c),
      [&](const Perm& g) {
        std::vector<std::size_t> edges;
        Perm p = g;
        for (std::size_t i = 0; i < m; ++i) {
          edges.push_back(cg->E.index_of(p));
          p = c * p;
        }
        return edges;
      },
      [&](const Perm& g) { return std::optional<std::size_t>(cg->V.index_of(g)); });
  M.construction = MapConstruction::RotaMap;
  M.type_label = "2^Pex";
  M.elements = {{"a", rp.a}, {"z", rp.z}};
  return M;
}

CombMap biro_map(const RotaryPair& rp) {
  require_general(rp);
  auto cg = std::make_shared<const CosetGraph>(vertex_rotary_graph(rp));
  const Perm za = conj(rp.z, rp.a);
  const Perm t = rp.z * za;
  const Perm& a = rp.a;
  const Perm& z = rp.z;
  const std::size_t ell = rp.ell;
  CombMap M = assemble(
      cg, Group(a.degree(), {z, za}),
      [&](const Perm& g) {
        std::vector<std::size_t> edges;
        Perm p = g;
        for (std::size_t i = 0; i < ell; ++i) {
          edges.push_back(cg->E.index_of(p));
          edges.push_back(cg->E.index_of(a * p));
          p = t * p;
        }
        return edges;
      },
      [&](const Perm& g) { return std::optional<std::size_t>(cg->V.index_of(z * g)); });
  M.construction = MapConstruction::BiRoMap;
  M.type_label = "2*ex";
  M.elements = {{"a", rp.a}, {"z", rp.z}};
  return M;
}

FlagRegularTriple validate_flag_regular_triple(const Perm& x, const Perm& y, const Perm& z) {
  if (x.degree() != y.degree() || x.degree() != z.degree()) {
    throw Error("DegreeMismatch", "x, y, z have different degrees");
  }
  for (const auto& [name, p] : {std::pair{"x", &x}, {"y", &y}, {"z", &z}}) {
    if (element_order(*p) != 2) {
      throw Error("NotInvolution", std::string(name) + " is not an involution");
    }
  }
  if (x == y || y == z || x == z) throw Error("NotDistinct", "x, y, z must be distinct");
  if (x * z != z * x) throw Error("NotCommuting", "x and z do not commute");
  FlagRegularTriple t;
  t.x = x;
  t.y = y;
  t.z = z;
  t.H = Group(x.degree(), {x, y});
  if (t.H.contains(z)) throw Error("ZInsideXY", "z lies in <x, y>");
  t.G = Group(x.degree(), {x, y, z});
  t.J = Group(x.degree(), {x, z});
  t.W = Group(x.degree(), {y, z});
  t.a = x * y;
  t.b = z * y;
  Group A = cyclic(t.a);
  Group n = intersect(A, conjugate(A, z));
  t.lambda = n.order();
  t.k = A.order() / n.order();
  t.m = element_order(t.b);
  t.lambda_p = intersect(A, cyclic(t.b)).order();
  if (t.k * t.lambda < 3) {
    throw Error("ValencyTooSmall", "k*lambda = " + std::to_string(t.k * t.lambda) + " < 3");
  }
  if (t.m < 3) throw Error("FaceLengthTooSmall", "|zy| = " + std::to_string(t.m) + " < 3");
  return t;
}

CombMap reg_map(const FlagRegularTriple& t) {
  if (t.k <= 2) {
    throw Error("DegenerateGraph", t.k == 1 ? "underlying graph has two vertices"
                                            : "underlying graph is a cycle extender");
  }
  auto cg = std::make_shared<const CosetGraph>(build_coset_graph(t.G, t.H, t.J));
  const Perm b = t.b;
  const std::size_t m = t.m;
  CombMap M = assemble(
      cg, t.W,
      [&](const Perm& g) {
        std::vector<std::size_t> edges;
        Perm p = g;
        for (std::size_t i = 0; i < m; ++i) {
          edges.push_back(cg->E.index_of(p));
          p = b * p;
        }
        return edges;
      },
      [](const Perm&) { return std::optional<std::size_t>(); });
  M.construction = MapConstruction::RegMap;
  M.elements = {{"x", t.x}, {"y", t.y}, {"z", t.z}};
  return M;
}

std::vector<std::array<std::size_t, 2>> edge_faces(const CombMap& M) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::array<std::size_t, 2>> slots(M.graph.num_edges(), {unset, unset});
  for (std::size_t f = 0; f < M.faces.size(); ++f) {
    for (std::size_t e : M.faces[f].edges) {
      if (e >= slots.size()) throw Error("NotASurface", "face uses an unknown edge");
      auto& s = slots[e];
      if (s[0] == unset) {
        s[0] = f;
      } else if (s[1] == unset && s[0] != f) {
        s[1] = f;
      } else {
        throw Error("NotASurface", "edge " + M.graph.edge_labels()[e] +
                                       " lies on more than two face sides");
      }
    }
  }
  for (std::size_t e = 0; e < slots.size(); ++e) {
    if (slots[e][1] == unset) {
      throw Error("NotASurface", "edge " + M.graph.edge_labels()[e] +
                                     " lies on fewer than two faces");
    }
  }
  return slots;
}

FlagSystem flag_system(const CombMap& M) {
  const MultiGraph& gr = M.graph;
  for (std::size_t f = 0; f < M.faces.size(); ++f) {
    const CycleSeq& c = M.faces[f];
    const std::size_t n = c.length();
    if (n == 0 || c.vertices.size() != n) {
      throw Error("NotASurface", "face " + M.face_labels[f] + " has a malformed boundary");
    }
    std::set<std::size_t> distinct(c.edges.begin(), c.edges.end());
    if (distinct.size() != n) {
      throw Error("NotASurface", "face " + M.face_labels[f] + " repeats an edge");
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto ends = gr.ends(c.edges[i]);
      std::size_t u = c.vertices[i], v = c.vertices[(i + 1) % n];
      if (!((ends[0] == u && ends[1] == v) || (ends[0] == v && ends[1] == u))) {
        throw Error("NotASurface", "face " + M.face_labels[f] + " breaks incidence at edge " +
                                       gr.edge_labels()[c.edges[i]]);
      }
    }
  }
  const auto slots = edge_faces(M);
  // Position of each edge inside each of its two faces.
  std::vector<std::array<std::size_t, 2>> pos(gr.num_edges());
  for (std::size_t f = 0; f < M.faces.size(); ++f) {
    const auto& edges = M.faces[f].edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      pos[edges[i]][slots[edges[i]][0] == f ? 0 : 1] = i;
    }
  }

  FlagSystem fs;
  fs.count = 4 * gr.num_edges();
  fs.r0.resize(fs.count);
  fs.r1.resize(fs.count);
  fs.r2.resize(fs.count);
  fs.vertex.resize(fs.count);
  fs.face.resize(fs.count);
  auto index = [&](std::size_t e, std::size_t v, std::size_t f) {
    std::size_t end = gr.ends(e)[0] == v ? 0 : 1;
    std::size_t side = slots[e][0] == f ? 0 : 1;
    return 4 * e + 2 * end + side;
  };
  for (std::size_t e = 0; e < gr.num_edges(); ++e) {
    for (std::size_t end = 0; end < 2; ++end) {
      for (std::size_t side = 0; side < 2; ++side) {
        std::size_t flag = 4 * e + 2 * end + side;
        std::size_t v = gr.ends(e)[end];
        std::size_t f = slots[e][side];
        fs.vertex[flag] = v;
        fs.face[flag] = f;
        fs.r0[flag] = 4 * e + 2 * (1 - end) + side;
        fs.r2[flag] = 4 * e + 2 * end + (1 - side);
        const CycleSeq& c = M.faces[f];
        const std::size_t n = c.length();
        const std::size_t p = pos[e][side];
        std::size_t next = c.vertices[p] == v ? c.edges[(p + n - 1) % n] : c.edges[(p + 1) % n];
        fs.r1[flag] = index(next, v, f);
      }
    }
  }
  for (std::size_t flag = 0; flag < fs.count; ++flag) {
    if (fs.r1[fs.r1[flag]] != flag) {
      throw Error("NotASurface", "corner structure is inconsistent at vertex " +
                                     gr.vertex_labels()[fs.vertex[flag]]);
    }
  }
  // Umbrella: the flags at each vertex form one orbit of <r1, r2>.
  std::vector<bool> seen(fs.count, false);
  std::vector<bool> vertex_done(gr.num_vertices(), false);
  for (std::size_t flag = 0; flag < fs.count; ++flag) {
    std::size_t v = fs.vertex[flag];
    if (vertex_done[v]) continue;
    vertex_done[v] = true;
    std::size_t orbit = 0;
    std::deque<std::size_t> queue{flag};
    seen[flag] = true;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      ++orbit;
      for (std::size_t nb : {fs.r1[cur], fs.r2[cur]}) {
        if (!seen[nb]) {
          seen[nb] = true;
          queue.push_back(nb);
        }
      }
    }
    if (orbit != 2 * gr.incident_edges(v).size()) {
      throw Error("NotASurface", "umbrella at vertex " + gr.vertex_labels()[v] +
                                     " is not a single cycle");
    }
  }
  for (std::size_t v = 0; v < gr.num_vertices(); ++v) {
    if (!vertex_done[v]) {
      throw Error("NotASurface", "vertex " + gr.vertex_labels()[v] + " is isolated");
    }
  }
  return fs;
}

SurfaceReport surface_check(const CombMap& M) {
  FlagSystem fs = flag_system(M);
  SurfaceReport r;
  r.chi = static_cast<long long>(M.graph.num_vertices()) -
          static_cast<long long>(M.graph.num_edges()) +
          static_cast<long long>(M.num_faces());
  r.flags = fs.count;
  return r;
}

bool orientability(const CombMap& M) {
  const auto slots = edge_faces(M);
  // Direction in which face f traverses edge e: +1 when along ends[0]->ends[1].
  auto traversal = [&](std::size_t f, std::size_t e) {
    const CycleSeq& c = M.faces[f];
    auto it = std::find(c.edges.begin(), c.edges.end(), e);
    std::size_t i = static_cast<std::size_t>(it - c.edges.begin());
    return c.vertices[i] == M.graph.ends(e)[0] ? 1 : -1;
  };
  std::vector<int> dir(M.num_faces(), 0);
  for (std::size_t seed = 0; seed < M.num_faces(); ++seed) {
    if (dir[seed] != 0) continue;
    dir[seed] = 1;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      for (std::size_t e : M.faces[f].edges) {
        std::size_t g = slots[e][0] == f ? slots[e][1] : slots[e][0];
        int want = -dir[f] * traversal(f, e) * traversal(g, e);
        if (dir[g] == 0) {
          dir[g] = want;
          queue.push_back(g);
        } else if (dir[g] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

const CosetGraph& context_of(const CombMap& M) {
  if (!M.context) throw Error("NoContext", "map carries no group context");
  return *M.context;
}

std::map<std::vector<std::size_t>, std::size_t> face_index(const CombMap& M) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t f = 0; f < M.num_faces(); ++f) idx.emplace(normal_form(M.faces[f].edges), f);
  return idx;
}

Perm action_with(const CombMap& M, const std::map<std::vector<std::size_t>, std::size_t>& idx,
                 const Perm& g) {
  const CosetGraph& cg = context_of(M);
  const std::size_t nv = cg.V.size(), ne = cg.E.size(), nf = M.num_faces();
  std::vector<Point> images(nv + ne + nf);
  for (std::size_t v = 0; v < nv; ++v) images[v] = static_cast<Point>(cg.V.act(v, g));
  std::vector<std::size_t> emap(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    emap[e] = cg.E.act(e, g);
    images[nv + e] = static_cast<Point>(nv + emap[e]);
  }
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<std::size_t> moved;
    for (std::size_t e : M.faces[f].edges) moved.push_back(emap[e]);
    auto it = idx.find(normal_form(moved));
    if (it == idx.end()) {
      throw Error("NotAnAutomorphism", g.to_cycles() + " does not permute the faces");
    }
    images[nv + ne + f] = static_cast<Point>(nv + ne + it->second);
  }
  return Perm(std::move(images));
}

}  // namespace

Perm map_action(const CombMap& M, const Perm& g) {
  return action_with(M, face_index(M), g);
}

MapKernels map_kernels(const CombMap& M) {
  const CosetGraph& cg = context_of(M);
  Group A, second;
  Perm z;
  switch (M.construction) {
    case MapConstruction::RotaMap:
    case MapConstruction::BiRoMap: {
      const Perm& a = M.elements.at("a");
      z = M.elements.at("z");
      A = cyclic(a);
      second = M.construction == MapConstruction::RotaMap ? cyclic(a * z)
                                                          : cyclic(z * conj(z, a));
      break;
    }
    case MapConstruction::RegMap: {
      const Perm& x = M.elements.at("x");
      const Perm& y = M.elements.at("y");
      z = M.elements.at("z");
      A = cyclic(x * y);
      second = cyclic(z * y);
      break;
    }
    case MapConstruction::Custom:
      throw Error("NoContext", "kernels are defined for constructed maps only");
  }
  MapKernels out;
  out.G_V = intersect(A, conjugate(A, z));
  out.G_VF = intersect(A, second);
  out.circular = out.G_VF.is_trivial();

  const std::size_t nv = cg.V.size(), ne = cg.E.size();
  Group direct_v = action_kernel(cg.G, cg.H);
  if (!(direct_v == out.G_V)) {
    throw Error("CrossCheckFailed", "vertex kernel differs from its formula");
  }
  const auto idx = face_index(M);
  std::vector<Perm> vf;
  for (const Perm& g : direct_v.elements()) {
    Perm act = action_with(M, idx, g);
    bool fixes = true;
    for (std::size_t f = 0; f < M.num_faces() && fixes; ++f) {
      fixes = act[nv + ne + f] == nv + ne + f;
    }
    if (fixes) vf.push_back(g);
  }
  if (!(Group::from_elements(cg.G.degree(), vf) == out.G_VF)) {
    throw Error("CrossCheckFailed", "vertex-face kernel differs from its formula");
  }
  return out;
}

bool maps_equal(const CombMap& M1, const CombMap& M2) {
  if (!(M1.graph == M2.graph)) {
    throw Error("LabelMismatch", "maps are built on different labelled graphs");
  }
  if (M1.num_faces() != M2.num_faces()) return false;
  std::vector<std::vector<std::size_t>> f1, f2;
  for (const auto& c : M1.faces) f1.push_back(normal_form(c.edges));
  for (const auto& c : M2.faces) f2.push_back(normal_form(c.edges));
  std::sort(f1.begin(), f1.end());
  std::sort(f2.begin(), f2.end());
  return f1 == f2;
}

bool map_isomorphic(const CombMap& M1, const CombMap& M2, std::size_t budget) {
  if (M1.graph.num_vertices() != M2.graph.num_vertices() ||
      M1.graph.num_edges() != M2.graph.num_edges() || M1.num_faces() != M2.num_faces()) {
    return false;
  }
  const FlagSystem a = flag_system(M1);
  const FlagSystem b = flag_system(M2);
  const std::size_t n = a.count;
  if (n == 0) return true;

  auto face_len = [](const CombMap& M, const FlagSystem& fs, std::size_t f) {
    return M.faces[fs.face[f]].length();
  };
  auto degree = [](const CombMap& M, const FlagSystem& fs, std::size_t f) {
    return M.graph.incident_edges(fs.vertex[f]).size();
  };

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::size_t steps = 0;
  std::vector<std::size_t> phi(n), inv(n);
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (face_len(M1, a, 0) != face_len(M2, b, cand) || degree(M1, a, 0) != degree(M2, b, cand)) {
      continue;
    }
    std::fill(phi.begin(), phi.end(), unset);
    std::fill(inv.begin(), inv.end(), unset);
    phi[0] = cand;
    inv[cand] = 0;
    std::deque<std::size_t> queue{0};
    std::size_t reached = 1;
    bool ok = true;
    while (!queue.empty() && ok) {
      std::size_t f = queue.front();
      queue.pop_front();
      if (++steps > budget) {
        throw Error("SearchCapExceeded", "map isomorphism search exceeded " +
                                             std::to_string(budget) + " steps");
      }
      const std::array<std::pair<const std::vector<std::size_t>*, const std::vector<std::size_t>*>, 3>
          gens{{{&a.r0, &b.r0}, {&a.r1, &b.r1}, {&a.r2, &b.r2}}};
      for (const auto& [ra, rb] : gens) {
        std::size_t src = (*ra)[f];
        std::size_t dst = (*rb)[phi[f]];
        if (phi[src] == unset) {
          if (inv[dst] != unset) {
            ok = false;
            break;
          }
          phi[src] = dst;
          inv[dst] = src;
          ++reached;
          queue.push_back(src);
        } else if (phi[src] != dst) {
          ok = false;
          break;
        }
      }
    }
    if (ok && reached == n) return true;
    if (ok && reached != n) {
      throw Error("NotConnected", "map isomorphism requires a connected flag graph");
    }
  }
  return false;
}

Classification classify_vertex_rotary(const CombMap& M, const RotaryPair& rp) {
  const CosetGraph& cg = context_of(M);
  if (!cg.G.contains(rp.a) || !cg.G.contains(rp.z)) {
    throw Error("NotASubgroup", "rotary pair does not act on this map");
  }
  const std::size_t base = cg.E.index_of(cg.G.identity());
  if (cg.E.act(base, rp.z) != base) {
    throw Error("InconsistentAction", "z does not fix the base edge");
  }
  const auto slots = edge_faces(M);
  const std::size_t nv = cg.V.size(), ne = cg.E.size();
  Perm act = map_action(M, rp.z);
  const std::size_t f = slots[base][0], g = slots[base][1];
  const std::size_t zf = act[nv + ne + f] - nv - ne;
  const std::size_t zg = act[nv + ne + g] - nv - ne;
  Classification out{MapKind::Rotary, {f, g}};
  if (zf == g && zg == f) {
    out.kind = MapKind::Rotary;
  } else if (zf == f && zg == g) {
    out.kind = MapKind::BiRotary;
  } else {
    throw Error("InconsistentAction", "z neither swaps nor fixes the faces at the base edge");
  }

  CombMap reference = out.kind == MapKind::Rotary ? rota_map(rp) : biro_map(rp);
  bool same_ground = reference.graph == M.graph && reference.context->G == cg.G;
  bool agrees = same_ground ? maps_equal(reference, M) : map_isomorphic(reference, M);
  if (!agrees) {
    throw Error("CrossCheckFailed", "map differs from the " + to_string(reference.construction) +
                                        " of the same pair");
  }
  return out;
}

bool flag_regular_check(const CombMap& M, const Group& G) {
  const CosetGraph& cg = context_of(M);
  if (!G.is_subgroup_of(cg.G)) return false;
  const FlagSystem fs = flag_system(M);
  if (fs.count == 0) return G.order() == 1;
  const auto slots = edge_faces(M);
  const auto idx = face_index(M);
  const std::size_t nv = cg.V.size(), ne = cg.E.size();

  auto flag_image = [&](const Perm& act, std::size_t flag) {
    std::size_t e = act[nv + flag / 4] - nv;
    std::size_t v = act[fs.vertex[flag]];
    std::size_t f = act[nv + ne + fs.face[flag]] - nv - ne;
    std::size_t end = M.graph.ends(e)[0] == v ? 0 : 1;
    std::size_t side = slots[e][0] == f ? 0 : 1;
    return 4 * e + 2 * end + side;
  };

  std::vector<Perm> acts;
  for (const Perm& s : G.generators()) acts.push_back(action_with(M, idx, s));
  std::vector<bool> seen(fs.count, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t orbit = 1;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const Perm& act : acts) {
      std::size_t nxt = flag_image(act, cur);
      if (!seen[nxt]) {
        seen[nxt] = true;
        ++orbit;
        queue.push_back(nxt);
      }
    }
  }
  if (orbit != fs.count) return false;
  std::size_t kernel = 0;
  for (const Perm& g : G.elements()) {
    if (action_with(M, idx, g).is_identity()) ++kernel;
  }
  return G.order() / kernel == fs.count;
}

}  // namespace rotamap
