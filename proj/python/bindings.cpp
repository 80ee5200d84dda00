#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotamap/catalog.hpp"
#include "rotamap/cosetgraph.hpp"
#include "rotamap/error.hpp"
#include "rotamap/io.hpp"
#include "rotamap/maps.hpp"
#include "rotamap/rotary.hpp"
#include "rotamap/verify.hpp"

namespace py = pybind11;
using namespace rotamap;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Group subgroup(std::size_t degree, const std::vector<Perm>& gens) { return Group(degree, gens); }

}  // namespace

PYBIND11_MODULE(_rotamap, m) {
  m.doc() = "Coset graphs, rotary pairs and their maps on surfaces";

  static py::exception<Error> error(m, "RotamapError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Perm>(m, "Perm")
      .def(py::init<std::vector<Point>>(), py::arg("images"))
      .def_static("identity", &Perm::identity)
      .def_static("parse", [](const std::string& text, std::size_t degree, Point base) {
        return Perm::parse_cycles(text, degree, base);
      }, py::arg("text"), py::arg("degree"), py::arg("base") = 0)
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", &Perm::images)
      .def("__mul__", &Perm::operator*)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__hash__", [](const Perm& p) { return PermHash{}(p); })
      .def("inverse", &Perm::inverse)
      .def("pow", &Perm::pow)
      .def("order", [](const Perm& p) { return element_order(p); })
      .def("cycles", &Perm::to_cycles, py::arg("base") = 0)
      .def("__repr__", [](const Perm& p) { return "Perm(" + p.to_cycles() + ")"; });
  m.def("conj", &conj, py::arg("h"), py::arg("g"));

  py::class_<Group>(m, "Group")
      .def(py::init(&subgroup), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("generators", &Group::generators)
      .def("order", &Group::order)
      .def("elements", &Group::elements)
      .def("__contains__", &Group::contains)
      .def("__len__", &Group::order)
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("is_subgroup_of", &Group::is_subgroup_of);
  m.def("cyclic", &cyclic);
  m.def("core", &core);
  m.def("center", &center);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def_property_readonly("num_vertices", &MultiGraph::num_vertices)
      .def_property_readonly("num_edges", &MultiGraph::num_edges)
      .def_property_readonly("vertex_labels", &MultiGraph::vertex_labels)
      .def("ends", [](const MultiGraph& g, std::size_t e) {
        const auto x = g.ends(e);
        return std::make_pair(x[0], x[1]);
      })
      .def("multiplicity", &MultiGraph::multiplicity)
      .def("to_json", [](const MultiGraph& g) { return to_python(graph_json(g)); })
      .def("to_dot", [](const MultiGraph& g) { return graph_dot(g); });
  m.def("graph_isomorphic", [](const MultiGraph& a, const MultiGraph& b) {
    return graph_isomorphic(a, b).isomorphic;
  });

  py::class_<GraphParams>(m, "GraphParams")
      .def_readonly("k", &GraphParams::k)
      .def_readonly("lambda_", &GraphParams::lambda)
      .def_readonly("connected", &GraphParams::connected)
      .def_readonly("g", &GraphParams::g);

  py::class_<CosetGraph>(m, "CosetGraph")
      .def_readonly("graph", &CosetGraph::graph)
      .def_readonly("params", &CosetGraph::params);
  m.def("coset_graph", [](const Group& G, const Group& H, const Group& J) {
    return build_coset_graph(G, H, J);
  }, py::arg("G"), py::arg("H"), py::arg("J"));
  m.def("base_graph", &base_graph, py::arg("G"), py::arg("H"), py::arg("J"));

  py::class_<RotaryPair>(m, "RotaryPair")
      .def(py::init(&validate_rotary_pair), py::arg("a"), py::arg("z"))
      .def_readonly("a", &RotaryPair::a)
      .def_readonly("z", &RotaryPair::z)
      .def_readonly("G", &RotaryPair::G)
      .def_readonly("k", &RotaryPair::k)
      .def_readonly("lambda_", &RotaryPair::lambda)
      .def_readonly("m", &RotaryPair::m)
      .def_readonly("ell", &RotaryPair::ell)
      .def_readonly("lambda_p", &RotaryPair::lambda_p)
      .def_readonly("lambda_pp", &RotaryPair::lambda_pp)
      .def("graph", &vertex_rotary_graph)
      .def("degenerate_class", [](const RotaryPair& rp) {
        return to_string(degenerate_class(rp).kind);
      });

  py::class_<FlagRegularTriple>(m, "FlagRegularTriple")
      .def(py::init(&validate_flag_regular_triple), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readonly("a", &FlagRegularTriple::a)
      .def_readonly("b", &FlagRegularTriple::b);

  py::class_<CombMap>(m, "Map")
      .def_readonly("graph", &CombMap::graph)
      .def_property_readonly("num_faces", &CombMap::num_faces)
      .def_property_readonly("construction", [](const CombMap& M) {
        return to_string(M.construction);
      })
      .def("face_edges", [](const CombMap& M, std::size_t f) { return M.faces.at(f).edges; })
      .def("face_vertices", [](const CombMap& M, std::size_t f) { return M.faces.at(f).vertices; })
      .def("chi", [](const CombMap& M) { return surface_check(M).chi; })
      .def("flags", [](const CombMap& M) { return surface_check(M).flags; })
      .def("orientable", &orientability)
      .def("circular", [](const CombMap& M) { return map_kernels(M).circular; })
      .def("to_json", [](const CombMap& M) { return to_python(map_json(M)); })
      .def("to_dot", &map_dot);
  m.def("rota_map", &rota_map);
  m.def("biro_map", &biro_map);
  m.def("reg_map", &reg_map);
  m.def("maps_equal", &maps_equal);
  m.def("map_isomorphic", [](const CombMap& a, const CombMap& b) { return map_isomorphic(a, b); });
  m.def("classify", [](const CombMap& M, const RotaryPair& rp) {
    return to_string(classify_vertex_rotary(M, rp).kind);
  });
  m.def("parse_map", &parse_map_json);

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("name", &CatalogEntry::name)
      .def_readonly("group", &CatalogEntry::group)
      .def_readonly("elements", &CatalogEntry::elements)
      .def_readonly("subgroups", &CatalogEntry::subgroups)
      .def_readonly("params", &CatalogEntry::params);
  m.def("catalog", &catalog_entry, py::arg("name"), py::arg("n") = 3, py::arg("lambda_") = 1);
  m.def("catalog_names", &catalog_names);

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name) {
    py::list out;
    for (const auto& r : run_suite(name)) {
      out.append(py::make_tuple(r.key, to_string(r.status), r.detail));
    }
    return out;
  });
}
