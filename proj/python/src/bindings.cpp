#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/intervals.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/io.hpp"

namespace py = pybind11;
using namespace zagreb;

namespace {

py::object to_py(const Integer& value) { return py::module_::import("builtins").attr("int")(value.str()); }

py::object to_py(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(value)), to_py(denominator(value)));
}

Vertex checked_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw py::index_error("vertex " + std::to_string(v) + " out of range");
  return v;
}

py::tuple quad_tuple(const DegreeQuad& q) { return py::make_tuple(q.x, q.y, q.u, q.v); }

py::list quads(const std::vector<DegreeQuad>& tuples) {
  py::list out;
  for (const auto& q : tuples) out.append(quad_tuple(q));
  return out;
}

Graph graph_from_pairs(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(order, edges);
}

py::dict report_dict(const ReportSection& section) {
  py::dict out;
  for (const auto& [key, value] : section.fields) {
    py::str k(key);
    if (!out.contains(k)) out[k] = py::list();
    out[k].cast<py::list>().append(value);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "First and second Zagreb index comparisons";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("order") = 0)
      .def(py::init(&graph_from_pairs), py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", [](const Graph& g, Vertex v) { return g.degree(checked_vertex(g, v)); })
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto ns = g.neighbors(checked_vertex(g, v));
             return std::vector<Vertex>(ns.begin(), ns.end());
           })
      .def("has_edge", [](const Graph& g, Vertex u, Vertex v) {
        return g.has_edge(checked_vertex(g, u), checked_vertex(g, v));
      })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("complete", &complete);
  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("star", &star);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("regular_circulant", &regular_circulant);
  m.def("disjoint_union", &disjoint_union);
  m.def("subdivision", &subdivision);
  m.def("is_connected", &is_connected);
  m.def("degree_sequence", &degree_sequence);
  m.def("degree_set", &degree_set);
  m.def("edge_class_counts", [](const Graph& g) { return edge_class_counts(g).entries; });
  m.def("classify_regularity", [](const Graph& g) { return to_string(classify_regularity(g)); });

  py::enum_<Verdict>(m, "Verdict")
      .value("StrictlyLess", Verdict::StrictlyLess)
      .value("Equal", Verdict::Equal)
      .value("StrictlyGreater", Verdict::StrictlyGreater);

  py::class_<ZagrebReport>(m, "ZagrebReport")
      .def_readonly("n", &ZagrebReport::n)
      .def_readonly("m", &ZagrebReport::m)
      .def_property_readonly("m1", [](const ZagrebReport& r) { return to_py(r.m1); })
      .def_property_readonly("m2", [](const ZagrebReport& r) { return to_py(r.m2); })
      .def_readonly("verdict", &ZagrebReport::verdict)
      .def_property_readonly("first_ratio", [](const ZagrebReport& r) { return to_py(r.first_ratio()); })
      .def_property_readonly("second_ratio", [](const ZagrebReport& r) { return to_py(r.second_ratio()); });

  m.def("first_zagreb", [](const Graph& g) { return to_py(first_zagreb(g)); });
  m.def("second_zagreb", [](const Graph& g) { return to_py(second_zagreb(g)); });
  m.def("compare", &compare);
  m.def("interaction", [](std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l) {
    return to_py(interaction(i, j, k, l));
  });
  m.def("decomposition_sum", [](const Graph& g) { return to_py(decomposition_sum(g)); });

  m.def("good_threshold", &good_threshold);
  m.def("is_good_interval", py::overload_cast<std::uint64_t, std::uint64_t>(&is_good_interval));
  m.def("scan_f_sign", [](const std::vector<std::uint64_t>& degrees) -> py::object {
    auto witness = scan_f_sign(degrees);
    if (!witness) return py::none();
    return py::make_tuple(quad_tuple(witness->quad), to_py(witness->value));
  });
  m.def("find_product_collisions",
        [](std::uint64_t a, std::uint64_t p) { return quads(find_product_collisions(a, p).tuples); });
  m.def("find_harmonic_collisions",
        [](std::uint64_t a, std::uint64_t p) { return quads(find_harmonic_collisions(a, p).tuples); });
  m.def("predicted_harmonic_collisions",
        [](std::uint64_t a, std::uint64_t p) { return quads(predicted_harmonic_collisions(a, p)); });
  m.def("classify_equality_structure", [](const Graph& g, std::uint64_t a, std::uint64_t p) {
    return to_string(classify_equality_structure(g, IntervalSpec{a, p}).verdict);
  });

  m.def(
      "build_gxyzw",
      [](std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t w) {
        return build_gxyzw(FamilyParams{x, y, z, w});
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("w"));
  m.def(
      "family_defect_polynomial",
      [](std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t w) {
        return to_py(family_defect_polynomial(FamilyParams{x, y, z, w}));
      },
      py::arg("x"), py::arg("y"), py::arg("z"), py::arg("w"));
  m.def(
      "solve_params",
      [](std::uint64_t y, std::uint64_t z) {
        FamilyParams p = solve_params(y, z);
        return py::make_tuple(p.x, p.y, p.z, p.w);
      },
      py::arg("y"), py::arg("z"));
  m.def("catalog_families", &catalog_families);
  m.def("catalog_generate", [](const std::string& name, std::vector<std::uint64_t> params) {
    return catalog_generate(catalog_entry(name, std::move(params)));
  });
  m.def("catalog_expected_verdict", [](const std::string& name, std::vector<std::uint64_t> params) {
    return catalog_entry(name, std::move(params)).expected_verdict;
  });

  m.def(
      "enumerate",
      [](std::size_t n, std::size_t min_degree, std::optional<std::size_t> max_degree, bool connected, bool dedup) {
        EnumerationSpec spec{n, min_degree, max_degree.value_or(n == 0 ? 0 : n - 1), connected,
                             dedup ? Dedup::CanonicalForm : Dedup::None};
        return enumerate(spec);
      },
      py::arg("n"), py::arg("min_degree") = 0, py::arg("max_degree") = py::none(), py::arg("connected") = false,
      py::arg("dedup") = false);
  m.def("counterexample_search", &counterexample_search, py::arg("n_max"));

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("write_edge_list", &write_edge_list);
  m.def("encode_graph6", &encode_graph6);
  m.def("decode_graph6", [](const std::string& line) { return decode_graph6(line); });
  m.def("describe", [](const Graph& g) { return report_dict(describe_graph(g)); });
}
