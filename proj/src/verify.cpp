#include "rotamap/verify.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "rotamap/catalog.hpp"
#include "rotamap/error.hpp"
#include "rotamap/maps.hpp"

namespace rotamap {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "info";
  }
  return "?";
}

namespace {

class Suite {
 public:
  // Runs `body`, which returns whether the check held and fills `detail`.
  void check(const std::string& key, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    CheckResult r{key, CheckStatus::Fail, ""};
    try {
      r.status = body(detail) ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const Error& e) {
      detail << e.code() << ": " << e.what();
    }
    r.detail = detail.str();
    results_.push_back(std::move(r));
  }

  void info(const std::string& key, const std::string& detail) {
    results_.push_back({key, CheckStatus::Info, detail});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

MultiGraph kneser_5_2() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) subsets.emplace_back(i, j);
  }
  std::vector<std::string> vlabels, elabels;
  for (auto [i, j] : subsets) vlabels.push_back(std::to_string(i) + std::to_string(j));
  std::vector<MultiGraph::Ends> ends;
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    for (std::size_t v = u + 1; v < subsets.size(); ++v) {
      auto [a, b] = subsets[u];
      auto [c, d] = subsets[v];
      if (a != c && a != d && b != c && b != d) {
        ends.push_back({u, v});
        elabels.push_back(vlabels[u] + "-" + vlabels[v]);
      }
    }
  }
  return MultiGraph(vlabels, elabels, ends);
}

std::size_t count_mu(const std::vector<Extender>& ex, std::size_t mu) {
  std::size_t n = 0;
  for (const auto& e : ex) n += e.mu == mu;
  return n;
}

std::vector<CheckResult> petersen_suite() {
  Suite s;
  for (auto variant : {PetersenVariant::A5, PetersenVariant::S5}) {
    const bool a5 = variant == PetersenVariant::A5;
    const std::string tag = a5 ? "a5" : "s5";
    const CatalogEntry e = petersen(variant);
    const Group& H = e.subgroups.at("H");
    const Group& L = e.subgroups.at("L");
    s.check(tag + ".base-graph-is-kneser-5-2", [&](std::ostringstream& d) {
      MultiGraph g = base_graph(e.group, H, cyclic(e.elements.at("g")));
      d << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges()
        << " girth=" << g.simple_girth();
      return g.num_vertices() == 10 && g.num_edges() == 15 && g.simple_girth() == 5 &&
             graph_isomorphic(g, kneser_5_2()).isomorphic;
    });
    s.check(tag + ".extenders-of-L", [&](std::ostringstream& d) {
      const auto ex = mu_extenders(e.group, H, L);
      const std::size_t top = a5 ? 2 : 4;
      d << "mu=" << top << ": " << count_mu(ex, top);
      if (!a5) d << ", mu=2: " << count_mu(ex, 2);
      return count_mu(ex, top) == 2 && (a5 || count_mu(ex, 2) == 2);
    });
  }
  return s.take();
}

void coset_checks(Suite& s, const std::string& tag, const Group& G, const Group& H,
                  const Group& J) {
  s.check(tag + ".valency-and-multiplicity", [&](std::ostringstream& d) {
    const CosetGraph cg = build_coset_graph(G, H, J);
    const auto& p = cg.params;
    const std::size_t k = cg.graph.valency(0);
    const std::size_t nb = cg.graph.neighbours(0).front();
    const std::size_t lambda = cg.graph.multiplicity(0, nb);
    d << "counted (" << k << "," << lambda << "), formula (" << p.k << "," << p.lambda << ")";
    return k == H.order() / p.K.order() && lambda == p.K.order() / intersect(H, J).order() &&
           k == p.k && lambda == p.lambda;
  });
  s.check(tag + ".base-graph-is-simpcos", [&](std::ostringstream&) {
    const CosetGraph cg = build_coset_graph(G, H, J);
    return graph_isomorphic(base_graph(G, H, J), simp_cos(G, H, cg.params.g)).isomorphic;
  });
  s.check(tag + ".edge-kernel-is-core", [&](std::ostringstream&) {
    return edge_kernel(build_coset_graph(G, H, J)) == core(G, J);
  });
  s.check(tag + ".connected-iff-generating", [&](std::ostringstream& d) {
    const CosetGraph cg = build_coset_graph(G, H, J);
    std::vector<Perm> gens = H.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    const bool generates = generated(G.degree(), gens).order() == G.order();
    d << "connected=" << cg.graph.is_connected() << " <H,J>=G: " << generates;
    return cg.graph.is_connected() == generates;
  });
  s.check(tag + ".core-quotient-isomorphic", [&](std::ostringstream&) {
    const CoreQuotient q = quotient_core(G, H, J);
    return graph_isomorphic(build_coset_graph(G, H, J).graph, q.graph.graph).isomorphic;
  });
}

std::vector<CheckResult> coset_suite() {
  Suite s;
  const CatalogEntry a5 = petersen(PetersenVariant::A5);
  coset_checks(s, "petersen-a5", a5.group, a5.subgroups.at("H"), a5.subgroups.at("L"));
  coset_checks(s, "petersen-a5-g", a5.group, a5.subgroups.at("H"),
               cyclic(a5.elements.at("g")));
  const CatalogEntry cube = hypercube(3, 2);
  coset_checks(s, "hypercube-3-2", cube.group, cube.subgroups.at("H"), cube.subgroups.at("J"));
  const CatalogEntry ce = core_example(3);
  coset_checks(s, "core-example-3", ce.group, ce.subgroups.at("H"), ce.subgroups.at("J"));
  return s.take();
}

std::vector<CheckResult> core_example_suite() {
  Suite s;
  for (std::size_t lambda : {2, 3, 4}) {
    const CatalogEntry e = core_example(lambda);
    const std::string tag = "lambda-" + std::to_string(lambda);
    const Group& H = e.subgroups.at("H");
    const Group& J = e.subgroups.at("J");
    s.check(tag + ".graph-is-extended-triangle", [&](std::ostringstream& d) {
      const CosetGraph cg = build_coset_graph(e.group, H, J);
      d << "k=" << cg.params.k << " lambda=" << cg.params.lambda;
      return cg.params.k == 2 && cg.params.lambda == lambda && cg.graph.num_vertices() == 3 &&
             cg.graph.is_connected();
    });
    s.check(tag + ".core-of-L-is-Z", [&](std::ostringstream& d) {
      const CosetGraph cg = build_coset_graph(e.group, H, J);
      const Group c = core(e.group, cg.params.L);
      d << "|Core(L)|=" << c.order();
      return c == e.subgroups.at("Z") && core(e.group, intersect(H, J)).is_trivial();
    });
    s.check(tag + ".base-graph-is-triangle", [&](std::ostringstream&) {
      const MultiGraph b = base_graph(e.group, H, J);
      return b.is_simple() && b.num_vertices() == 3 && b.num_edges() == 3;
    });
  }
  return s.take();
}

std::vector<CheckResult> hypercube_suite() {
  Suite s;
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 1}, {3, 2}, {3, 4}, {4, 1}};
  for (auto [n, lambda] : cases) {
    const CatalogEntry e = hypercube(n, lambda);
    const std::string tag = "n" + std::to_string(n) + "-l" + std::to_string(lambda);
    const auto& el = e.elements;
    const RotaryPair px = validate_rotary_pair(el.at("a"), el.at("z"));
    const RotaryPair py = validate_rotary_pair(el.at("a"), el.at("zx"));
    const FlagRegularTriple t = validate_flag_regular_triple(el.at("x"), el.at("y"), el.at("z"));
    s.check(tag + ".graph-valency-and-multiplicity", [&](std::ostringstream& d) {
      const CosetGraph cg = build_coset_graph(e.group, e.subgroups.at("H"), e.subgroups.at("J"));
      d << "k=" << cg.params.k << " lambda=" << cg.params.lambda;
      return cg.params.k == n && cg.params.lambda == lambda &&
             graph_isomorphic(cg.graph, vertex_rotary_graph(px).graph).isomorphic &&
             graph_isomorphic(cg.graph, vertex_rotary_graph(py).graph).isomorphic;
    });
    const CombMap reg = reg_map(t);
    {
      s.check(tag + ".regmap-isomorphic-to-biromap-x", [&](std::ostringstream&) {
        return map_isomorphic(reg, biro_map(px));
      });
      s.check(tag + ".regmap-isomorphic-to-rotamap-y", [&](std::ostringstream&) {
        return map_isomorphic(reg, rota_map(py));
      });
      s.check(tag + ".regmap-faces-are-4-cycles", [&](std::ostringstream& d) {
        bool ok = map_kernels(reg).circular;
        for (const auto& f : reg.faces) {
          ok = ok && f.length() == 4 &&
               classify_induced(f) == RegularCycleKind{CycleKind::SimpleCycle, 4, 1};
        }
        d << "|F|=" << reg.num_faces();
        return ok;
      });
    }
    s.check(tag + ".rotamap-face-length", [&](std::ostringstream& d) {
      const CombMap r = rota_map(px);
      const std::size_t g2 = std::gcd<std::size_t>(2, lambda);
      const std::size_t len = 2 * n * lambda / g2;
      const RegularCycleKind kind = classify_induced(r.faces.front());
      d << "length " << r.faces.front().length() << ", expected " << len << "; "
        << to_string(kind) << "; circular=" << map_kernels(r).circular;
      return r.faces.front().length() == len &&
             kind == RegularCycleKind{lambda / g2 == 1 ? CycleKind::SimpleCycle
                                                      : CycleKind::ExtendedCycle,
                                      2 * n, lambda / g2} &&
             map_kernels(r).circular == (lambda <= 2);
    });
    if (n == 3 && lambda == 1) {
      s.check(tag + ".regmap-sphere-and-flag-regular", [&](std::ostringstream& d) {
        const SurfaceReport r = surface_check(reg);
        d << "chi=" << r.chi << " flags=" << r.flags;
        return r.chi == 2 && r.flags == 48 && flag_regular_check(reg, e.group);
      });
      s.check(tag + ".rotamap-x-torus", [&](std::ostringstream& d) {
        const CombMap r = rota_map(px);
        const SurfaceReport rep = surface_check(r);
        d << "|F|=" << r.num_faces() << " chi=" << rep.chi;
        return r.num_faces() == 4 && rep.chi == 0;
      });
    }
  }
  return s.take();
}

// lambda' as listed in the published table, by the residue of mu.
std::size_t table_lambda_p(std::size_t mu, std::size_t lambda) {
  if (mu % 4 == 2) return lambda / 2;
  if (mu % 4 == 0) return lambda / 4;
  if (mu % 6 == 3) return lambda / 6;
  return lambda / 2;
}

std::vector<CheckResult> knn_suite() {
  Suite s;
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 4}, {3, 8}, {5, 6}, {5, 4}};
  for (auto [n, lambda] : cases) {
    const std::string tag = "n" + std::to_string(n) + "-l" + std::to_string(lambda);
    CatalogEntry e;
    try {
      e = knn(n, lambda);
    } catch (const Error& err) {
      s.check(tag + ".well-defined", [&](std::ostringstream& d) {
        d << err.code() << ": " << err.what();
        return false;
      });
      continue;
    }
    const RotaryPair rp = validate_rotary_pair(e.elements.at("a"), e.elements.at("z"));
    const auto lp = static_cast<std::size_t>(e.params.at("lambda_p"));
    const auto m = static_cast<std::size_t>(e.params.at("m"));
    s.check(tag + ".az-order-matches-formula", [&](std::ostringstream& d) {
      d << "|az|=" << rp.m << " 2*lcm(" << lp << "," << n << ")=" << m;
      return rp.m == m;
    });
    s.check(tag + ".graph-is-knn-extender", [&](std::ostringstream& d) {
      const CosetGraph cg = vertex_rotary_graph(rp);
      d << "k=" << rp.k << " lambda=" << rp.lambda;
      return rp.k == n && rp.lambda == lambda && cg.graph.num_vertices() == 2 * n;
    });
    s.check(tag + ".rotamap-boundary", [&](std::ostringstream& d) {
      const CombMap r = rota_map(rp);
      const RegularCycleKind kind = classify_induced(r.faces.front());
      d << to_string(kind) << " m=" << r.faces.front().length();
      const CycleKind tagk = lp == 1 ? CycleKind::SimpleCycle : CycleKind::ExtendedCycle;
      return kind == RegularCycleKind{tagk, 2 * n, lp} && m == 2 * n * lp &&
             map_kernels(r).circular == (lp == 1);
    });
    const std::size_t tlp = table_lambda_p(lambda / 2, lambda);
    const std::size_t tm = 2 * n * tlp;
    std::ostringstream d;
    d << "mu=" << lambda / 2 << ": computed lambda'=" << lp << " m=" << m << "; table lambda'="
      << tlp << " m=" << tm << (lp == tlp && m == tm ? " (agree)" : " (MISMATCH)");
    s.info(tag + ".table-comparison", d.str());
  }
  s.check("n3-l10.ill-defined", [](std::ostringstream& d) {
    try {
      knn(3, 10);
    } catch (const Error& e) {
      d << e.code();
      return e.code() == "IllDefined";
    }
    return false;
  });
  return s.take();
}

std::vector<CheckResult> three_a6_suite() {
  Suite s;
  const CatalogEntry e = three_a6();
  const Perm& a = e.elements.at("a");
  const Perm& ap = e.elements.at("ap");
  const Perm& z = e.elements.at("z");
  s.check("group-order-and-centre", [&](std::ostringstream& d) {
    d << "|G|=" << e.group.order() << " |Z|=" << e.subgroups.at("Z").order();
    return e.group.order() == 1080 && e.subgroups.at("Z").order() == 3;
  });
  s.check("zza-has-order-5", [&](std::ostringstream& d) {
    const Group D = generated(18, {z, conj(z, a)});
    d << "|zz^a|=" << element_order(z * conj(z, a)) << " |<z,z^a>|=" << D.order();
    return element_order(z * conj(z, a)) == 5 && D.order() == 10;
  });
  s.check("subgroup-triples-equal", [&](std::ostringstream&) {
    return cyclic(a) == cyclic(ap) && conj(z, a) == conj(z, ap) &&
           generated(18, {z, conj(z, a)}) == generated(18, {z, conj(z, ap)});
  });
  const RotaryPair p1 = validate_rotary_pair(a, z);
  const RotaryPair p2 = validate_rotary_pair(ap, z);
  const CombMap m1 = biro_map(p1);
  const CombMap m2 = biro_map(p2);
  s.check("biromaps-differ", [&](std::ostringstream&) { return !maps_equal(m1, m2); });
  for (const auto* m : {&m1, &m2}) {
    const std::string tag = m == &m1 ? "biromap-a" : "biromap-a11";
    s.check(tag + ".counts", [&](std::ostringstream& d) {
      const SurfaceReport r = surface_check(*m);
      d << "|V|=" << m->graph.num_vertices() << " |E|=" << m->graph.num_edges()
        << " |F|=" << m->num_faces() << " face length " << m->faces.front().length()
        << " chi=" << r.chi;
      return m->graph.num_vertices() == 72 && m->graph.num_edges() == 540 &&
             m->num_faces() == 108 && m->faces.front().length() == 10 && r.chi == -360;
    });
    s.check(tag + ".circular", [&](std::ostringstream&) { return map_kernels(*m).circular; });
    s.info(tag + ".orientable", orientability(*m) ? "yes" : "no");
  }
  return s.take();
}

std::vector<CheckResult> classification_suite() {
  Suite s;
  std::vector<std::pair<std::string, RotaryPair>> pairs;
  for (auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {3, 2}, {4, 1}}) {
    const CatalogEntry e = hypercube(n, l);
    const std::string tag = "hypercube-n" + std::to_string(n) + "-l" + std::to_string(l);
    pairs.emplace_back(tag + "-x", validate_rotary_pair(e.elements.at("a"), e.elements.at("z")));
    pairs.emplace_back(tag + "-y", validate_rotary_pair(e.elements.at("a"), e.elements.at("zx")));
  }
  const CatalogEntry k = knn(3, 4);
  pairs.emplace_back("knn-n3-l4", validate_rotary_pair(k.elements.at("a"), k.elements.at("z")));
  const CatalogEntry t = three_a6();
  pairs.emplace_back("three-a6", validate_rotary_pair(t.elements.at("a"), t.elements.at("z")));
  for (const auto& [tag, rp] : pairs) {
    s.check(tag + ".rotamap-is-rotary", [&](std::ostringstream&) {
      const CombMap m = rota_map(rp);
      return classify_vertex_rotary(m, rp).kind == MapKind::Rotary && orientability(m);
    });
    s.check(tag + ".biromap-is-birotary", [&](std::ostringstream&) {
      return classify_vertex_rotary(biro_map(rp), rp).kind == MapKind::BiRotary;
    });
  }
  const CatalogEntry cube = hypercube(3, 1);
  const auto& el = cube.elements;
  const CombMap reg =
      reg_map(validate_flag_regular_triple(el.at("x"), el.at("y"), el.at("z")));
  s.check("hypercube-regmap.x-pair-birotary", [&](std::ostringstream&) {
    return classify_vertex_rotary(reg, validate_rotary_pair(el.at("a"), el.at("z"))).kind ==
           MapKind::BiRotary;
  });
  s.check("hypercube-regmap.y-pair-rotary", [&](std::ostringstream&) {
    return classify_vertex_rotary(reg, validate_rotary_pair(el.at("a"), el.at("zx"))).kind ==
           MapKind::Rotary;
  });
  return s.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"petersen", "coset-theorems", "core-example", "hypercube",
          "knn", "three-a6", "classification"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "petersen") return petersen_suite();
  if (name == "coset-theorems") return coset_suite();
  if (name == "core-example") return core_example_suite();
  if (name == "hypercube") return hypercube_suite();
  if (name == "knn") return knn_suite();
  if (name == "three-a6") return three_a6_suite();
  if (name == "classification") return classification_suite();
  throw Error("UnknownName", "no verification suite named '" + name + "'");
}

}  // namespace rotamap
