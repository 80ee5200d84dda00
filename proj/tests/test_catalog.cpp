#include <numeric>

#include "doctest.h"
#include "rotamap/catalog.hpp"
#include "rotamap/rotary.hpp"
#include "support.hpp"

using namespace rotamap;
using namespace testing_support;

namespace {

// Q_n with every edge repeated lambda times, built from bit strings.
MultiGraph hypercube_graph(std::size_t n, std::size_t lambda) {
  const std::size_t nv = std::size_t{1} << n;
  std::vector<std::string> vl;
  for (std::size_t v = 0; v < nv; ++v) vl.push_back(std::to_string(v));
  std::vector<std::string> el;
  std::vector<MultiGraph::Ends> ends;
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t w = v ^ (std::size_t{1} << i);
      if (w < v) continue;
      for (std::size_t c = 0; c < lambda; ++c) {
        el.push_back(vl[v] + "-" + vl[w] + "#" + std::to_string(c));
        ends.push_back({v, w});
      }
    }
  return MultiGraph(vl, el, ends);
}

MultiGraph complete_bipartite(std::size_t n, std::size_t lambda) {
  std::vector<std::string> vl;
  for (std::size_t v = 0; v < 2 * n; ++v) vl.push_back(std::to_string(v));
  std::vector<std::string> el;
  std::vector<MultiGraph::Ends> ends;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = n; v < 2 * n; ++v)
      for (std::size_t c = 0; c < lambda; ++c) {
        el.push_back(vl[u] + "-" + vl[v] + "#" + std::to_string(c));
        ends.push_back({u, v});
      }
  return MultiGraph(vl, el, ends);
}

bool iso(const MultiGraph& a, const MultiGraph& b) { return certifies(a, b, graph_isomorphic(a, b)); }

}  // namespace

TEST_CASE("petersen") {
  const CatalogEntry a5 = petersen(PetersenVariant::A5);
  CHECK(a5.group.order() == 60);
  CHECK(a5.subgroups.at("H").order() == 6);
  CHECK(a5.subgroups.at("L").order() == 4);
  const CatalogEntry s5 = petersen(PetersenVariant::S5);
  CHECK(s5.group.order() == 120);
  CHECK(s5.subgroups.at("H").order() == 12);
  CHECK(s5.subgroups.at("L").order() == 8);
  CHECK(a5.elements.at("g").to_cycles(1) == "(2 4)(3 5)");
  for (const CatalogEntry* e : {&a5, &s5}) {
    const MultiGraph base = base_graph(e->group, e->subgroups.at("H"), e->subgroups.at("L"));
    CHECK(oracle::refinement_signature(mult_matrix(base)) ==
          oracle::refinement_signature(oracle::kneser(5, 2)));
    CHECK(base.num_edges() == 15);
  }
}

TEST_CASE("hypercube") {
  SUBCASE("orders against the closure oracle") {
    const CatalogEntry e = hypercube(3, 1);
    const auto A = oracle::close(raw_gens(e.group), e.group.degree());
    CHECK(A.size() == 48);
    CHECK(e.group.order() == 48);
    CHECK(e.subgroups.at("X").order() == 24);
    CHECK(e.subgroups.at("Y").order() == 24);
    CHECK(e.group.degree() == 2 * 3 + 3);
  }
  SUBCASE("relations") {
    for (auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {4, 2}, {5, 3}}) {
      const CatalogEntry e = hypercube(n, l);
      const Perm& a = e.elements.at("a");
      const Perm& x = e.elements.at("x");
      for (std::size_t i = 0; i < n; ++i) {
        const Perm& vi = e.elements.at("v" + std::to_string(i));
        CHECK(conj(vi, a) == e.elements.at("v" + std::to_string((i + 1) % n)));
        CHECK(conj(vi, x) == e.elements.at("v" + std::to_string((n - i) % n)));
      }
      CHECK(conj(a, x) == a.inverse());
      CHECK(e.group.order() == (std::size_t{1} << (n + 1)) * n * l);
      CHECK(e.elements.at("y") == a * x);
      CHECK(e.elements.at("z") == e.elements.at("v0"));
    }
  }
  SUBCASE("graph chain") {
    for (std::size_t n : {3, 4}) {
      for (std::size_t l : {1, 2, 3}) {
        CAPTURE(n);
        CAPTURE(l);
        const CatalogEntry e = hypercube(n, l);
        const MultiGraph q = hypercube_graph(n, l);
        const CosetGraph full =
            build_coset_graph(e.group, e.subgroups.at("H"), e.subgroups.at("J"));
        const RotaryPair xp = validate_rotary_pair(e.elements.at("a"), e.elements.at("z"));
        const RotaryPair yp = validate_rotary_pair(e.elements.at("a"), e.elements.at("zx"));
        CHECK(xp.G == e.subgroups.at("X"));
        CHECK(yp.G == e.subgroups.at("Y"));
        CHECK(iso(q, full.graph));
        CHECK(iso(q, vertex_rotary_graph(xp).graph));
        CHECK(iso(q, vertex_rotary_graph(yp).graph));
      }
    }
  }
  CHECK(error_code([] { hypercube(2, 1); }) == "BadParams");
  CHECK(error_code([] { hypercube(3, 0); }) == "BadParams");
}

TEST_CASE("knn") {
  const CatalogEntry e34 = knn(3, 4);
  CHECK(e34.group.order() == 72);
  CHECK(element_order(e34.elements.at("a")) == 12);
  const CatalogEntry e56 = knn(5, 6);
  CHECK(e56.params.at("mu") == 3);
  CHECK(e56.group.order() == 300);

  // (mu + delta)^2 mod lambda for mu = 5: 49 mod 10 = 9.
  CHECK((5 + 2) * (5 + 2) % 10 == 9);
  CHECK(error_code([] { knn(3, 10); }) == "IllDefined");
  CHECK(error_code([] { knn(4, 6); }) == "BadParams");
  CHECK(error_code([] { knn(3, 2); }) == "BadParams");
  CHECK(error_code([] { knn(3, 6); }) == "BadParams");
  CHECK(error_code([] { knn(3, 5); }) == "BadParams");

  for (auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{
           {3, 4}, {3, 8}, {5, 4}, {5, 6}, {7, 4}, {5, 8}, {7, 6}}) {
    CAPTURE(n);
    CAPTURE(l);
    const CatalogEntry e = knn(n, l);
    const long long mu = e.params.at("mu");
    const long long delta = e.params.at("delta");
    CHECK(mu == static_cast<long long>(l / 2));
    CHECK(delta == (mu % 2 == 0 ? 1 : 2));
    CHECK(e.group.order() == 2 * l * n * n);
    CHECK(oracle::close(raw_gens(e.group), e.group.degree()).size() == 2 * l * n * n);
    const Perm& a = e.elements.at("a");
    const Perm& z = e.elements.at("z");
    const Perm& b = e.elements.at("b");
    CHECK(a == b * e.elements.at("c1") * e.elements.at("c2"));
    CHECK(conj(b, z) == b.pow(mu + delta));
    CHECK(element_order(a) == l * n);
    const std::size_t lp = element_order(b.pow(mu + delta + 1));
    CHECK(static_cast<long long>(lp) == e.params.at("lambda_p"));
    // |az| read off by the oracle, against the closed form.
    CHECK(oracle::order(oracle::mul(raw(a), raw(z))) == 2 * std::lcm(lp, n));
    CHECK(e.params.at("m") == static_cast<long long>(2 * std::lcm(lp, n)));
    const RotaryPair rp = validate_rotary_pair(a, z);
    CHECK(iso(complete_bipartite(n, l), vertex_rotary_graph(rp).graph));
  }
}

TEST_CASE("three_a6") {
  const CatalogEntry e = three_a6();
  const Perm& a = e.elements.at("a");
  const Perm& z = e.elements.at("z");
  const Perm& b = e.elements.at("b");
  const Perm& c = e.elements.at("c");
  const Perm& ap = e.elements.at("ap");
  CHECK(e.group.order() == 1080);
  const oracle::Set G = raw_set(e.group);
  CHECK(oracle::close(raw_gens(e.group), 18) == G);
  CHECK(oracle::center(G).size() == 3);
  CHECK(raw_set(e.subgroups.at("Z")) == oracle::center(G));
  CHECK(element_order(b) == 5);
  CHECK(element_order(z) == 2);
  CHECK(element_order(c) == 3);
  CHECK(a == b.pow(2) * c);
  CHECK(ap == a.pow(11));
  CHECK(oracle::order(oracle::mul(raw(z), oracle::conj(raw(z), raw(a)))) == 5);
  CHECK(cyclic(a) == cyclic(ap));
  CHECK(conj(z, ap) == conj(z, a));

  // Quotient by the centre, read on the six fibres.
  CHECK(three_a6_blocks().size() == 6);
  CHECK(three_a6_block_image(a).to_cycles(1) == "(1 2 3 4 5)");
  CHECK(three_a6_block_image(z).to_cycles(1) == "(3 4)(5 6)");
  std::vector<Perm> images;
  for (const Perm& g : e.group.generators()) images.push_back(three_a6_block_image(g));
  const Group quotient(6, images);
  CHECK(quotient.order() == 360);
  const Group A6(6, {Perm::parse_cycles("(1 2 3 4 5)", 6, 1), Perm::parse_cycles("(1 2 3)", 6, 1),
                     Perm::parse_cycles("(4 5 6)", 6, 1)});
  CHECK(quotient == A6);
  CHECK(three_a6_block_image(c).is_identity());
}

TEST_CASE("core_example") {
  const CatalogEntry e3 = core_example(3);
  const CosetGraph cg = build_coset_graph(e3.group, e3.subgroups.at("H"), e3.subgroups.at("J"));
  CHECK(cg.params.k == 2);
  CHECK(cg.params.lambda == 3);
  CHECK(raw_set(core(e3.group, cg.params.L)) == oracle::core(raw_set(e3.group), raw_set(cg.params.L)));
  CHECK(core(e3.group, cg.params.L).order() == 3);
  CHECK(core_example(2).group.order() == 12);
  for (std::size_t l : {2, 4, 5}) {
    const CatalogEntry e = core_example(l);
    const CosetGraph g = build_coset_graph(e.group, e.subgroups.at("H"), e.subgroups.at("J"));
    CHECK(g.params.lambda == l);
    CHECK(g.graph.num_vertices() == 3);
  }
  CHECK(error_code([] { core_example(1); }) == "BadParams");
}

TEST_CASE("catalog_entry dispatch") {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_entry(name, 3, 4);
    CHECK(e.group.order() > 1);
  }
  CHECK(catalog_entry("hypercube", 4, 2).group.order() == 32 * 4 * 2);
  CHECK(error_code([] { catalog_entry("icosahedron", 3, 1); }) == "UnknownName");
}
