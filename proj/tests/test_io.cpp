#include "doctest.h"
#include "rotamap/catalog.hpp"
#include "rotamap/io.hpp"
#include "rotamap/verify.hpp"
#include "support.hpp"

using namespace rotamap;
using namespace testing_support;

TEST_CASE("group files") {
  const GroupFile f = parse_group_file(R"({"degree": 3, "generators": {"r": [1, 2, 0], "s": [1, 0, 2]}})");
  CHECK(f.degree == 3);
  REQUIRE(f.generators.size() == 2);
  CHECK(f.generators[0].first == "r");
  CHECK(f.get("s") == cyc("(0 1)", 3));
  CHECK(Group(f.degree, f.perms()).order() == 6);
  CHECK(error_code([&] { f.get("t"); }) == "UnknownName");

  const auto message = [](const std::string& text) {
    try {
      parse_group_file(text);
    } catch (const Error& e) {
      return e.code() + ": " + e.what();
    }
    return std::string();
  };
  CHECK(message("{").rfind("ParseError", 0) == 0);
  CHECK(message("[]").rfind("ParseError", 0) == 0);
  CHECK(message(R"({"generators": {}})").find("degree") != std::string::npos);
  CHECK(message(R"({"degree": 2, "generators": {"p": [0]}})").find("generators.p") !=
        std::string::npos);
  CHECK(message(R"({"degree": 2, "generators": {"p": [0, "x"]}})").find("generators.p[1]") !=
        std::string::npos);
  CHECK(message(R"({"degree": 2, "generators": {"p": [0, 0]}})").find("generators.p") !=
        std::string::npos);
}

TEST_CASE("round trip: exported group files keep canonical labels") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const CatalogEntry e = catalog_entry(name, 3, name == "hypercube" ? 1 : 4);
    const GroupFile out = group_file_from_entry(e);
    const GroupFile back = parse_group_file(group_file_json(out).dump());
    REQUIRE(back.generators.size() == out.generators.size());
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
      CHECK(back.generators[i] == out.generators[i]);
    }
    const Group G(back.degree, back.perms());
    CHECK(G == e.group);
  }
  // Same coset labels from the original entry and from the re-imported file.
  const CatalogEntry p = petersen(PetersenVariant::A5);
  const GroupFile back = parse_group_file(group_file_json(group_file_from_entry(p)).dump());
  const Group G(back.degree, back.perms());
  const Group H(back.degree, {back.get("h1"), back.get("h2")});
  const Group J = cyclic(back.get("g"));
  const CosetGraph a = build_coset_graph(p.group, p.subgroups.at("H"), cyclic(p.elements.at("g")));
  const CosetGraph b = build_coset_graph(G, H, J);
  CHECK(a.graph == b.graph);
}

TEST_CASE("graph export") {
  const CatalogEntry e = core_example(3);
  const CosetGraph cg = build_coset_graph(e.group, e.subgroups.at("H"), e.subgroups.at("J"));
  const Json j = graph_json(cg.graph);
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].size() == 9);
  CHECK(j["edges"][0]["ends"].size() == 2);
  CHECK(j["vertices"][0]["label"] == cg.graph.vertex_labels()[0]);
  const std::string dot = graph_dot(cg.graph);
  CHECK(dot.rfind("graph \"G\" {", 0) == 0);
  CHECK(dot.find("multiplicity=3") != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) {
    ++lines;
  }
  CHECK(lines == 3);
}

TEST_CASE("map export and re-import") {
  const CatalogEntry cube = hypercube(3, 1);
  const RotaryPair rp = validate_rotary_pair(cube.elements.at("a"), cube.elements.at("z"));
  const CombMap M = rota_map(rp);
  const Json j = map_json(M);
  CHECK(j["faces"].size() == 4);
  CHECK(j["faces"][0]["boundary_edges"].size() == 6);
  CHECK(j["faces"][0]["boundary_vertices"].size() == 6);
  CHECK(j["chi"] == 0);
  CHECK(j["orientable"] == true);
  CHECK(j["construction"] == "RotaMap");

  const CombMap back = parse_map_json(j.dump());
  CHECK(back.graph == M.graph);
  CHECK(maps_equal(back, M));
  CHECK(surface_check(back).chi == 0);
  CHECK(map_dot(M).find("graph") != std::string::npos);

  CHECK(error_code([] { parse_map_json(R"({"vertices": []})"); }) == "ParseError");
  Json broken = j;
  broken["faces"][0]["boundary_edges"][1] = broken["faces"][0]["boundary_edges"][3];
  CHECK_FALSE(error_code([&] { parse_map_json(broken.dump()); }).empty());

  const Json c = cycle_json(M.faces[0]);
  CHECK(c["edges"].size() == 6);
  CHECK(c["vertices"].size() == 6);
}

TEST_CASE("error json") {
  const Json e = error_json("BadIndex", "|J : H∩J| = 3");
  CHECK(e["error"] == "BadIndex");
  CHECK(e["message"] == "|J : H∩J| = 3");
}

TEST_CASE("verification suites") {
  CHECK(error_code([] { run_suite("no-such-suite"); }) == "UnknownName");
  const auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "petersen") != names.end());
  const auto results = run_suite("petersen");
  CHECK(!results.empty());
  bool saw_extenders = false;
  for (const auto& r : results) {
    CAPTURE(r.key);
    CAPTURE(r.detail);
    CHECK(r.status != CheckStatus::Fail);
    if (r.key == "a5.extenders-of-L") saw_extenders = true;
  }
  CHECK(saw_extenders);
}
