#include "rotamap/rotary.hpp"

#include <algorithm>
#include <set>

#include "rotamap/error.hpp"

namespace rotamap {

RotaryPair validate_rotary_pair(const Perm& a, const Perm& z) {
  if (a.degree() != z.degree()) {
    throw Error("DegreeMismatch", "a and z have different degrees");
  }
  if (element_order(z) != 2) {
    throw Error("ZNotInvolution", "|z| = " + std::to_string(element_order(z)));
  }
  RotaryPair rp;
  rp.a = a;
  rp.z = z;
  rp.A = cyclic(a);
  if (rp.A.contains(z)) throw Error("ZInsideA", "z lies in <a>");
  rp.Z = cyclic(z);
  rp.G = Group(a.degree(), {a, z});

  Group n = intersect(rp.A, conjugate(rp.A, z));
  rp.lambda = n.order();
  rp.k = rp.A.order() / n.order();
  Perm az = a * z;
  Perm zza = z * conj(z, a);
  rp.m = element_order(az);
  rp.ell = element_order(zza);
  rp.lambda_p = intersect(rp.A, cyclic(az)).order();
  rp.lambda_pp = intersect(rp.A, cyclic(zza)).order();
  return rp;
}

CosetGraph vertex_rotary_graph(const RotaryPair& rp) {
  return build_coset_graph(rp.G, rp.A, rp.Z);
}

DegenerateClass degenerate_class(const RotaryPair& rp) {
  if (rp.k == 1) return {DegenerateKind::TwoVertexExtender, 0};
  if (rp.k == 2 && rp.lambda == 1) {
    return {DegenerateKind::SimpleCycleGraph, rp.G.order() / rp.A.order()};
  }
  return {DegenerateKind::General, 0};
}

std::string to_string(DegenerateKind kind) {
  switch (kind) {
    case DegenerateKind::TwoVertexExtender: return "TwoVertexExtender";
    case DegenerateKind::SimpleCycleGraph: return "SimpleCycleGraph";
    case DegenerateKind::General: return "General";
  }
  return "?";
}

CycleSeq make_cycle(const MultiGraph& graph, std::vector<std::size_t> edges,
                    std::optional<std::size_t> start) {
  if (edges.empty()) throw Error("BadCycle", "empty edge sequence");
  {
    std::set<std::size_t> distinct(edges.begin(), edges.end());
    if (distinct.size() != edges.size()) {
      throw Error("BadCycle", "cycle repeats an edge");
    }
  }
  std::vector<std::size_t> starts;
  if (start) {
    starts.push_back(*start);
  } else {
    starts = {graph.ends(edges[0])[0], graph.ends(edges[0])[1]};
  }
  for (std::size_t s : starts) {
    if (!graph.incident(s, edges[0])) continue;
    std::vector<std::size_t> trace{s};
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      std::size_t cur = trace.back();
      if (!graph.incident(cur, edges[i])) {
        ok = false;
        break;
      }
      trace.push_back(graph.other_end(edges[i], cur));
    }
    if (ok && trace.back() == s) {
      trace.pop_back();
      return CycleSeq{std::move(edges), std::move(trace)};
    }
  }
  throw Error("BadCycle", "edge sequence is not a closed walk");
}

std::vector<std::size_t> normal_form(const std::vector<std::size_t>& edges) {
  const std::size_t n = edges.size();
  std::vector<std::size_t> best = edges;
  std::vector<std::size_t> candidate(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = dir == 0 ? edges[(r + i) % n] : edges[(r + n - i) % n];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

bool seq_class_equal(const CycleSeq& c1, const CycleSeq& c2) {
  return c1.length() == c2.length() && normal_form(c1.edges) == normal_form(c2.edges);
}

RegularCycleKind classify_induced(const CycleSeq& c) {
  const std::size_t len = c.length();
  std::set<std::size_t> distinct(c.vertices.begin(), c.vertices.end());
  const std::size_t n = distinct.size();
  if (len < 3 || n < 2 || len % n != 0) return {};
  for (std::size_t i = 0; i < len; ++i) {
    if (c.vertices[i] != c.vertices[(i + n) % len]) return {};
  }
  const std::size_t lambda = len / n;
  if (n == 2) return {CycleKind::DoubledPair, 2, len};
  if (lambda == 1) return {CycleKind::SimpleCycle, n, 1};
  return {CycleKind::ExtendedCycle, n, lambda};
}

std::string to_string(const RegularCycleKind& kind) {
  switch (kind.tag) {
    case CycleKind::SimpleCycle: return "SimpleCycle(" + std::to_string(kind.n) + ")";
    case CycleKind::ExtendedCycle:
      return "ExtendedCycle(" + std::to_string(kind.n) + "," + std::to_string(kind.lambda) + ")";
    case CycleKind::DoubledPair: return "DoubledPair(" + std::to_string(kind.lambda) + ")";
    case CycleKind::NotRegular: return "NotRegular";
  }
  return "?";
}

std::string to_string(CycleType type) {
  switch (type) {
    case CycleType::AZ: return "az";
    case CycleType::AinvZ: return "ainvz";
    case CycleType::ZZa: return "zza";
    case CycleType::ZZainv: return "zzainv";
  }
  return "?";
}

CanonicalCycle canonical_cycle(const RotaryPair& rp, const CosetGraph& cg, CycleType type) {
  if (degenerate_class(rp).kind != DegenerateKind::General) {
    throw Error("DegenerateGraph", "canonical cycles need a graph that is neither "
                                   "two-vertex nor a simple cycle");
  }
  const Perm a = (type == CycleType::AZ || type == CycleType::ZZa) ? rp.a : rp.a.inverse();
  const Perm& z = rp.z;
  std::vector<std::size_t> edges;
  if (type == CycleType::AZ || type == CycleType::AinvZ) {
    Perm c = a * z;
    Perm p = Perm::identity(a.degree());
    for (std::size_t i = 0; i < rp.m; ++i) {
      edges.push_back(cg.E.index_of(p));
      p = p * c;
    }
    CycleSeq seq = make_cycle(cg.graph, std::move(edges), cg.V.index_of(p));
    return {std::move(seq), cyclic(c), rp.lambda_p};
  }
  Perm t = z * conj(z, a);
  Perm p = Perm::identity(a.degree());
  for (std::size_t i = 0; i < rp.ell; ++i) {
    edges.push_back(cg.E.index_of(p));
    edges.push_back(cg.E.index_of(a * p));
    p = p * t;
  }
  CycleSeq seq = make_cycle(cg.graph, std::move(edges), cg.V.index_of(z));
  return {std::move(seq), Group(a.degree(), {z, conj(z, a)}), rp.lambda_pp};
}

CanonicalCycle canonical_cycle(const RotaryPair& rp, CycleType type) {
  return canonical_cycle(rp, vertex_rotary_graph(rp), type);
}

CycleSeq translate(const CosetGraph& cg, const CycleSeq& c, const Perm& g) {
  CycleSeq out;
  out.edges.reserve(c.length());
  out.vertices.reserve(c.length());
  for (std::size_t e : c.edges) out.edges.push_back(cg.E.act(e, g));
  for (std::size_t v : c.vertices) out.vertices.push_back(cg.V.act(v, g));
  return out;
}

Group sequence_stabilizer(const CosetGraph& cg, const CycleSeq& c) {
  const auto target = normal_form(c.edges);
  std::vector<Perm> stab;
  for (const Perm& g : cg.G.elements()) {
    std::vector<std::size_t> moved;
    moved.reserve(c.length());
    for (std::size_t e : c.edges) moved.push_back(cg.E.act(e, g));
    if (normal_form(moved) == target) stab.push_back(g);
  }
  return Group::from_elements(cg.G.degree(), stab);
}

Group vertex_kernel(const RotaryPair& rp) {
  Group n = intersect(rp.A, conjugate(rp.A, rp.z));
  if (!(n == action_kernel(rp.G, rp.A))) {
    throw Error("CrossCheckFailed", "<a> ∩ <a^z> differs from the vertex kernel");
  }
  return n;
}

}  // namespace rotamap
