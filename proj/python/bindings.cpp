#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cordial/construct.hpp"
#include "cordial/decide.hpp"
#include "cordial/harness.hpp"
#include "cordial/io.hpp"

namespace py = pybind11;
using namespace cordial;

namespace {

std::vector<std::pair<Vertex, Vertex>> arc_pairs(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Arc& a : d.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

Digraph make_digraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::vector<Arc> v;
  for (auto [t, h] : arcs) v.push_back({t, h});
  return Digraph(n, std::move(v));
}

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> v;
  for (auto [a, b] : edges) v.push_back({a, b});
  return Graph(n, std::move(v));
}

py::tuple as_tuple(const LambdaTriple& t) { return py::make_tuple(t.alpha, t.beta, t.gamma); }

}  // namespace

PYBIND11_MODULE(_cordial, m) {
  m.doc() = "Exhaustive (2,3)-cordiality decisions and constructive orientations";

  static py::exception<CapExceeded> cap(m, "CapExceeded", PyExc_OverflowError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      py::set_error(cap, e.what());
    } catch (const ParseError& e) {
      py::set_error(PyExc_ValueError, e.what());
    } catch (const ValidationError& e) {
      py::set_error(PyExc_RuntimeError, e.what());
    }
  });

  py::enum_<Scope>(m, "Scope")
      .value("NONISOLATED", Scope::kNonisolated)
      .value("ALL", Scope::kAll);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("size", &Digraph::size)
      .def_property_readonly("arcs", &arc_pairs)
      .def("has_arc", &Digraph::has_arc)
      .def("out_degree", &Digraph::out_degree)
      .def("in_degree", &Digraph::in_degree)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__str__", [](const Digraph& d) { return write_text(d); })
      .def("to_dot", [](const Digraph& d) { return to_dot(d); });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__str__", [](const Graph& g) { return write_text(g); });

  py::class_<LambdaTriple>(m, "LambdaTriple")
      .def_readonly("alpha", &LambdaTriple::alpha)
      .def_readonly("beta", &LambdaTriple::beta)
      .def_readonly("gamma", &LambdaTriple::gamma)
      .def("as_tuple", &as_tuple)
      .def("__repr__", [](const LambdaTriple& t) { return "LambdaTriple" + format_triple(t); });

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("decision", &Verdict::decision)
      .def_readonly("search_space", &Verdict::search_space)
      .def_property_readonly("labelling",
                             [](const Verdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return py::cast(v.witness->labelling.labels);
                             })
      .def_property_readonly("orientation",
                             [](const Verdict& v) -> py::object {
                               if (!v.witness || !v.witness->orientation) return py::none();
                               return py::cast(*v.witness->orientation);
                             })
      .def_property_readonly("lambda_",
                             [](const Verdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return as_tuple(v.witness->lambda);
                             })
      .def("__bool__", [](const Verdict& v) { return v.decision; })
      .def("to_json", [](const Verdict& v) { return nlohmann::json(v).dump(); });

  py::class_<ConstructionResult>(m, "ConstructionResult")
      .def_readonly("digraph", &ConstructionResult::digraph)
      .def_property_readonly("labelling", [](const ConstructionResult& r) { return r.labelling.labels; })
      .def_property_readonly("lambda_", [](const ConstructionResult& r) { return as_tuple(r.lambda); })
      .def_readonly("validated", &ConstructionResult::validated)
      .def_readonly("trace", &ConstructionResult::trace);

  m.def("gen_complete_graph", &gen_complete_graph, py::arg("n"));
  m.def("gen_wheel", &gen_wheel, py::arg("n"));
  m.def("gen_fan", &gen_fan, py::arg("n"));
  m.def("gen_cycle", &gen_cycle, py::arg("n"));
  m.def("gen_parallel_edges_graph", &gen_parallel_edges_graph, py::arg("n"));
  m.def("gen_cycle_out_wheel", &gen_cycle_out_wheel, py::arg("n"));
  m.def("gen_cycle_out_fan", &gen_cycle_out_fan, py::arg("n"));
  m.def("reverse_digraph", &reverse_digraph);
  m.def("tournament_from_index",
        [](std::size_t n, std::uint64_t i) { return tournament_from_index(n, i).digraph(); });
  m.def("canonical_form", &canonical_form);
  m.def("friendly_count", &friendly_count);
  m.def("parse_graph_text", [](const std::string& text) -> py::object {
    GraphInput in = parse_graph_text(text);
    if (auto* d = std::get_if<Digraph>(&in)) return py::cast(*d);
    return py::cast(std::get<Graph>(in));
  });

  m.def(
      "lambda_triple",
      [](const Digraph& d, const std::vector<std::uint8_t>& labels) {
        if (labels.size() != d.order()) throw std::invalid_argument("one label per vertex required");
        return as_tuple(lambda(d, VertexLabelling{labels, Scope::kNonisolated}));
      },
      py::arg("digraph"), py::arg("labels"));

  m.def(
      "is_23_cordial",
      [](const Digraph& d, Scope s, unsigned threads) {
        py::gil_scoped_release release;
        return is_23_cordial(d, s, SearchOptions{threads});
      },
      py::arg("digraph"), py::arg("scope") = Scope::kNonisolated, py::arg("threads") = 1);
  m.def(
      "is_23_orientable",
      [](const Graph& g, Scope s, unsigned threads) {
        py::gil_scoped_release release;
        return is_23_orientable(g, s, SearchOptions{threads});
      },
      py::arg("graph"), py::arg("scope") = Scope::kNonisolated, py::arg("threads") = 1);
  m.def("cordial_feasible_triple", &cordial_feasible_triple, py::arg("m"), py::arg("z"));
  m.def("max_arcs", &max_arcs, py::arg("n"));

  m.def(
      "census",
      [](std::size_t n, unsigned threads) {
        const CensusReport r = tournament_census(n, SearchOptions{threads});
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["canonical"] = row.canonical;
          d["out_degrees"] = row.out_degrees;
          d["class_size"] = row.class_size;
          d["cordial"] = row.cordial;
          rows.append(d);
        }
        return rows;
      },
      py::arg("n"), py::arg("threads") = 1);

  m.def("orient_wheel", &orient_wheel, py::arg("n"));
  m.def("orient_fan", &orient_fan, py::arg("n"));
  m.def("label_5_tournament", [](const Digraph& d) { return label_5_tournament(Tournament(d)); });
  m.def("wheel_case", [](std::size_t n) { return std::string(to_string(wheel_case(n))); });

  m.def(
      "run_harness",
      [](const std::vector<std::string>& filter) {
        const HarnessReport r = run_harness(filter);
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["id"] = row.info.id;
          d["group"] = row.info.group;
          d["pass"] = row.pass;
          d["detail"] = row.detail;
          rows.append(d);
        }
        return rows;
      },
      py::arg("claims") = std::vector<std::string>{});
}
