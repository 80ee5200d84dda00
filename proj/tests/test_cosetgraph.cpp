#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "rotamap/catalog.hpp"
#include "rotamap/cosetgraph.hpp"
#include "support.hpp"

using namespace rotamap;
using namespace testing_support;

namespace {

std::set<oracle::Set> extender_sets(const std::vector<Extender>& xs, std::size_t mu) {
  std::set<oracle::Set> out;
  for (const auto& x : xs) {
    if (x.mu == mu) out.insert(raw_set(x.J));
  }
  return out;
}

}  // namespace

TEST_CASE("build_coset_graph: examples") {
  SUBCASE("C3 with triple edges") {
    const CatalogEntry e = core_example(3);
    const CosetGraph cg = build_coset_graph(e.group, e.subgroups.at("H"), e.subgroups.at("J"));
    CHECK(cg.graph.num_vertices() == 3);
    CHECK(cg.graph.num_edges() == 9);
    CHECK(cg.params.k == 2);
    CHECK(cg.params.lambda == 3);
    CHECK(cg.params.connected);
    CHECK(matches_oracle(cg));
  }
  SUBCASE("A5 on the Petersen vertices with J = <g>") {
    const CatalogEntry e = petersen(PetersenVariant::A5);
    const CosetGraph cg =
        build_coset_graph(e.group, e.subgroups.at("H"), cyclic(e.elements.at("g")));
    CHECK(cg.graph.num_vertices() == 10);
    CHECK(cg.graph.num_edges() == 30);
    CHECK(cg.params.k == 3);
    CHECK(cg.params.lambda == 2);
    CHECK(matches_oracle(cg));
    // The least element of J \ H is g itself.
    CHECK(cg.params.g == e.elements.at("g"));
    CHECK(coset_label(cg.params.g) == "(1 3)(2 4)");
  }
  SUBCASE("K2 from a group of order two") {
    const Group G(2, {cyc("(0 1)", 2)});
    const CosetGraph cg = build_coset_graph(G, Group(2, {}), G);
    CHECK(cg.graph.num_vertices() == 2);
    CHECK(cg.graph.num_edges() == 1);
    CHECK(cg.params.k == 1);
    CHECK(cg.params.lambda == 1);
  }
}

TEST_CASE("build_coset_graph: errors") {
  const Group S4 = sym(4);
  const Group H(4, {cyc("(0 1)", 4)});
  CHECK(error_code([&] { build_coset_graph(S4, S4, H); }) == "HEqualsG");
  CHECK(error_code([&] { build_coset_graph(S4, H, Group(4, {cyc("(0 1 2)", 4)})); }) ==
        "BadIndex");
  CHECK(error_code([&] { build_coset_graph(Group(4, {cyc("(0 1)", 4)}), H,
                                           Group(4, {cyc("(2 3)", 4)})); }) == "NotASubgroup");
  const Group J(4, {cyc("(0 1)", 4), cyc("(2 3)", 4)});
  CHECK(error_code([&] { build_coset_graph(S4, H, J, cyc("(0 1)", 4)); }) == "BadArcReverser");
  CHECK(error_code([&] { build_coset_graph(S4, H, J, cyc("(2 3)", 4)); }).empty());
}

TEST_CASE("base_graph and simp_cos") {
  const CatalogEntry ce = core_example(3);
  const MultiGraph c3 = base_graph(ce.group, ce.subgroups.at("H"), ce.subgroups.at("J"));
  CHECK(c3.num_vertices() == 3);
  CHECK(c3.num_edges() == 3);
  CHECK(c3.is_simple());

  const CatalogEntry p = petersen(PetersenVariant::A5);
  const Group& H = p.subgroups.at("H");
  const MultiGraph pet = base_graph(p.group, H, cyclic(p.elements.at("g")));
  CHECK(pet.num_vertices() == 10);
  CHECK(pet.num_edges() == 15);
  CHECK(pet.simple_girth() == 5);
  // Frozen from the oracle Kneser graph K(5,2).
  const oracle::Mult kn = oracle::kneser(5, 2);
  CHECK(oracle::girth(kn) == 5);
  CHECK(oracle::refinement_signature(kn) == oracle::refinement_signature(mult_matrix(pet)));

  const MultiGraph sc = simp_cos(p.group, H, p.elements.at("g"));
  CHECK(certifies(pet, sc, graph_isomorphic(pet, sc)));

  const Group G2(2, {cyc("(0 1)", 2)});
  const MultiGraph k2 = simp_cos(G2, Group(2, {}), cyc("(0 1)", 2));
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 1);

  // Hypercube group with vertex stabiliser <a, x> gives the 3-cube.
  const CatalogEntry cube = hypercube(3, 1);
  const Group Hc(cube.group.degree(), {cube.elements.at("a"), cube.elements.at("x")});
  const MultiGraph q3 = simp_cos(cube.group, Hc, cube.elements.at("z"));
  CHECK(q3.num_vertices() == 8);
  CHECK(q3.num_edges() == 12);
  CHECK(q3.simple_girth() == 4);
  for (std::size_t v = 0; v < 8; ++v) CHECK(q3.valency(v) == 3);

  CHECK(error_code([&] { simp_cos(p.group, H, p.elements.at("h1")); }) == "GInH");
}

TEST_CASE("mu_extenders") {
  SUBCASE("A5") {
    const CatalogEntry p = petersen(PetersenVariant::A5);
    const auto xs = mu_extenders(p.group, p.subgroups.at("H"), p.subgroups.at("L"));
    const std::size_t d = p.group.degree();
    CHECK(extender_sets(xs, 2) == std::set<oracle::Set>{
                                      raw_set(Group(d, {cyc("(1 3)(2 4)", d)})),
                                      raw_set(Group(d, {cyc("(1 4)(2 3)", d)}))});
    CHECK(extender_sets(xs, 1) == std::set<oracle::Set>{raw_set(p.subgroups.at("L"))});
    CHECK(xs.size() == 3);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i - 1].mu >= xs[i].mu);
  }
  SUBCASE("S5") {
    const CatalogEntry p = petersen(PetersenVariant::S5);
    const auto xs = mu_extenders(p.group, p.subgroups.at("H"), p.subgroups.at("L"));
    const std::size_t d = p.group.degree();
    CHECK(extender_sets(xs, 4) == std::set<oracle::Set>{
                                      raw_set(Group(d, {cyc("(1 3)(2 4)", d)})),
                                      raw_set(Group(d, {cyc("(1 4)(2 3)", d)}))});
    CHECK(extender_sets(xs, 1).size() == 1);
    for (const auto& x : xs) {
      CHECK(x.mu * x.J.order() == p.subgroups.at("L").order());
      CHECK_FALSE(x.J.is_subgroup_of(p.subgroups.at("H")));
      // Each extender really has multiplicity mu over the base graph.
      const CosetGraph cg = build_coset_graph(p.group, p.subgroups.at("H"), x.J);
      CHECK(cg.params.lambda == x.mu);
    }
  }
}

TEST_CASE("quotient_core") {
  SUBCASE("core-free input keeps its order") {
    const CatalogEntry p = petersen(PetersenVariant::A5);
    const CoreQuotient q = quotient_core(p.group, p.subgroups.at("H"), p.subgroups.at("L"));
    CHECK(q.M.is_trivial());
    CHECK(q.quotient.order() == 60);
  }
  SUBCASE("S3 x Z3 with H ∩ J = Z3") {
    const CatalogEntry e = core_example(3);
    const Group J(e.group.degree(), {e.elements.at("s"), e.elements.at("w")});
    const CosetGraph cg = build_coset_graph(e.group, e.subgroups.at("H"), J);
    const CoreQuotient q = quotient_core(e.group, e.subgroups.at("H"), J);
    CHECK(q.M.order() == 3);
    CHECK(raw_set(q.M) == oracle::core(raw_set(e.group), raw_set(intersect(e.subgroups.at("H"), J))));
    CHECK(q.quotient.order() == e.group.order() / 3);
    CHECK(certifies(cg.graph, q.graph.graph, graph_isomorphic(cg.graph, q.graph.graph)));
  }
}

TEST_CASE("recover_coset_rep") {
  SUBCASE("Petersen 2-extender") {
    const CatalogEntry p = petersen(PetersenVariant::A5);
    const Group& H = p.subgroups.at("H");
    const Group J = cyclic(p.elements.at("g"));
    const CosetGraph cg = build_coset_graph(p.group, H, J);
    const Group act = induced_action(cg);
    const CosetRep rep = recover_coset_rep(act, cg.graph, 0, cg.graph.incident_edges(0)[0]);
    const CosetGraph back = build_coset_graph(act, rep.H, rep.J);
    CHECK(rep.H.order() == H.order());
    CHECK(rep.J.order() == J.order());
    CHECK(certifies(cg.graph, back.graph, graph_isomorphic(cg.graph, back.graph)));
  }
  SUBCASE("C3 with triple edges") {
    const CatalogEntry e = core_example(3);
    const CosetGraph cg = build_coset_graph(e.group, e.subgroups.at("H"), e.subgroups.at("J"));
    const Group act = induced_action(cg);
    const CosetRep rep = recover_coset_rep(act, cg.graph, 0, cg.graph.incident_edges(0)[0]);
    const CosetGraph back = build_coset_graph(act, rep.H, rep.J);
    CHECK(certifies(cg.graph, back.graph, graph_isomorphic(cg.graph, back.graph)));
  }
  SUBCASE("K2") {
    const Group G(2, {cyc("(0 1)", 2)});
    const CosetGraph cg = build_coset_graph(G, Group(2, {}), G);
    const Group act = induced_action(cg);
    const CosetRep rep = recover_coset_rep(act, cg.graph, 0, 0);
    CHECK(rep.H.is_trivial());
    CHECK(rep.J == act);
  }
  SUBCASE("a vertex-transitive but not arc-transitive action is rejected") {
    // C4 with the rotation group only, acting on 4 vertices and 4 edges.
    const MultiGraph c4({"0", "1", "2", "3"}, {"01", "12", "23", "30"},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Group rot(8, {cyc("(0 1 2 3)(4 5 6 7)", 8)});
    CHECK(error_code([&] { recover_coset_rep(rot, c4, 0, 0); }) == "NotArcTransitive");
  }
}

TEST_CASE("graph_isomorphic") {
  const CatalogEntry p = petersen(PetersenVariant::A5);
  const MultiGraph pet = base_graph(p.group, p.subgroups.at("H"), p.subgroups.at("L"));
  CHECK(certifies(pet, pet, graph_isomorphic(pet, pet)));

  const CatalogEntry ce = core_example(3);
  const MultiGraph c3 = base_graph(ce.group, ce.subgroups.at("H"), ce.subgroups.at("J"));
  const MultiGraph k3({"a", "b", "c"}, {"ab", "bc", "ca"}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(certifies(c3, k3, graph_isomorphic(c3, k3)));

  // Kneser graph K(5,2) built directly from 2-subsets.
  std::vector<std::string> vl;
  std::vector<std::array<std::size_t, 2>> pairs;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      vl.push_back(std::to_string(i) + std::to_string(j));
      pairs.push_back({i, j});
    }
  std::vector<std::string> el;
  std::vector<MultiGraph::Ends> ends;
  for (std::size_t u = 0; u < pairs.size(); ++u)
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      std::set<std::size_t> s{pairs[u][0], pairs[u][1], pairs[v][0], pairs[v][1]};
      if (s.size() == 4) {
        el.push_back(vl[u] + "-" + vl[v]);
        ends.push_back({u, v});
      }
    }
  const MultiGraph kneser(vl, el, ends);
  CHECK(certifies(pet, kneser, graph_isomorphic(pet, kneser)));

  // Same degree sequence, different graphs: C6 against two triangles.
  const MultiGraph c6({"0", "1", "2", "3", "4", "5"}, {"a", "b", "c", "d", "e", "f"},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const MultiGraph tt({"0", "1", "2", "3", "4", "5"}, {"a", "b", "c", "d", "e", "f"},
                      {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(graph_isomorphic(c6, tt).isomorphic);
  CHECK(error_code([&] { graph_isomorphic(pet, kneser, 1); }) == "SearchCapExceeded");
}

TEST_CASE("property: coset graph theorems over the triple corpus") {
  for (const auto& t : corpus::coset_triples()) {
    if (t.G.order() > 200) continue;  // the large entries run in the acceptance suite
    CAPTURE(t.name);
    const CosetGraph cg = build_coset_graph(t.G, t.H, t.J);
    CHECK(matches_oracle(cg));

    // Valency and multiplicity as counted in the graph.
    const Group HJ = intersect(t.H, t.J);
    const Group K = intersect(t.H, conjugate(t.H, cg.params.g));
    CHECK(cg.params.k == t.H.order() / K.order());
    CHECK(cg.params.lambda == K.order() / HJ.order());
    for (std::size_t v = 0; v < cg.graph.num_vertices(); ++v) {
      CHECK(cg.graph.valency(v) == cg.params.k);
      for (std::size_t u : cg.graph.neighbours(v)) CHECK(cg.graph.multiplicity(u, v) == cg.params.lambda);
    }

    // Connected iff <H, J> = G.
    const bool generates = generated(t.G.degree(), [&] {
                             std::vector<Perm> g = t.H.generators();
                             for (const auto& x : t.J.generators()) g.push_back(x);
                             return g;
                           }()).order() == t.G.order();
    CHECK(cg.graph.is_connected() == generates);
    CHECK(oracle::connected(mult_matrix(cg.graph)) == generates);

    // The lambda-extender of the base graph, and the base graph is SimpCos.
    const MultiGraph base = base_graph(t.G, t.H, t.J);
    CHECK(base.is_simple());
    const MultiGraph ext = extender(base, cg.params.lambda);
    CHECK(certifies(cg.graph, ext, graph_isomorphic(cg.graph, ext)));
    const MultiGraph sc = simp_cos(t.G, t.H, cg.params.g);
    CHECK(certifies(base, sc, graph_isomorphic(base, sc)));

    // Edge kernel is the core of J.
    CHECK(raw_set(edge_kernel(cg)) == oracle::core(raw_set(t.G), raw_set(t.J)));

    // Every arc-reversing element gives the same labelled graph.
    for (const Perm& g : t.J.elements()) {
      if (t.H.contains(g)) continue;
      CHECK(build_coset_graph(t.G, t.H, t.J, g).graph == cg.graph);
    }

    // Arc-transitive induced action with the original stabilisers.
    const Group act = induced_action(cg);
    const CosetRep rep = recover_coset_rep(act, cg.graph, 0, cg.graph.incident_edges(0)[0]);
    CHECK(act.order() * core(t.G, HJ).order() == t.G.order());
    CHECK(rep.H.order() * cg.V.size() == act.order());
  }
}
