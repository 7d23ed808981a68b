#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mhc/canonical.hpp"
#include "mhc/constructions.hpp"
#include "mhc/formulas.hpp"
#include "mhc/graph6.hpp"
#include "mhc/minimality.hpp"
#include "mhc/search.hpp"
#include "mhc/solver.hpp"

namespace py = pybind11;

namespace {

mhc::Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  return mhc::Graph::from_edges(n, edges);
}

py::dict survey_to_dict(const mhc::SurveyReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["source"] = mhc::survey_source_name(r.source);
  d["graphs_scanned"] = r.graphs_scanned;
  d["pass_min_degree"] = r.pass_min_degree;
  d["pass_connectivity"] = r.pass_connectivity;
  d["pass_hc"] = r.pass_hc;
  d["mhc_graphs"] = r.mhc_graphs;
  d["max_degree_spectrum"] = r.max_degree_spectrum;
  d["min_degree_spectrum"] = r.min_degree_spectrum;
  d["wheel_unique_at_top"] = r.wheel_unique_at_top;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact laboratory for minimally hamiltonian-connected graphs";

  py::class_<mhc::Graph>(m, "Graph")
      .def_static("from_edges", &graph_from_edges, py::arg("n"), py::arg("edges"))
      .def_static("complete", &mhc::Graph::complete)
      .def_static("cycle", &mhc::Graph::cycle)
      .def_static("path", &mhc::Graph::path)
      .def_property_readonly("n", &mhc::Graph::order)
      .def_property_readonly("m", &mhc::Graph::size)
      .def("degree", &mhc::Graph::degree)
      .def("has_edge", &mhc::Graph::has_edge)
      .def("edges", &mhc::Graph::edges)
      .def("add_edge", &mhc::Graph::add_edge)
      .def("remove_edge", &mhc::Graph::remove_edge)
      .def("__eq__", [](const mhc::Graph& a, const mhc::Graph& b) { return a == b; })
      .def("__repr__", [](const mhc::Graph& g) {
        return "Graph(graph6=\"" + mhc::emit_graph6(g) + "\")";
      });

  py::class_<mhc::LabeledGraph>(m, "LabeledGraph")
      .def_property_readonly("graph", &mhc::LabeledGraph::graph)
      .def_property_readonly("family",
                             [](const mhc::LabeledGraph& lg) {
                               return mhc::family_name(lg.family());
                             })
      .def_property_readonly("n", [](const mhc::LabeledGraph& lg) {
        return lg.params().n;
      })
      .def_property_readonly("delta", [](const mhc::LabeledGraph& lg) {
        return lg.params().delta;
      })
      .def("roles",
           [](const mhc::LabeledGraph& lg) {
             py::dict d;
             for (int v = 0; v < lg.graph().order(); ++v)
               d[py::int_(v)] = lg.role(v).name();
             return d;
           })
      .def("vertex", &mhc::LabeledGraph::find_vertex, py::arg("role_name"))
      .def("drop_edge", &mhc::LabeledGraph::drop_edge);

  m.def("parse_graph6", &mhc::parse_graph6);
  m.def("emit_graph6", &mhc::emit_graph6);
  m.def("parse_edge_list", &mhc::parse_edge_list);
  m.def("emit_edge_list", &mhc::emit_edge_list);
  m.def("emit_dot", &mhc::emit_dot);
  m.def("canonical_form", &mhc::canonical_form);

  m.def("degree_profile", [](const mhc::Graph& g) {
    auto p = mhc::degree_profile(g);
    return py::make_tuple(p.degrees, p.min_degree, p.max_degree);
  });
  m.def("is_connected", &mhc::is_connected);
  m.def("vertex_connectivity", &mhc::vertex_connectivity);

  m.def("validity", [](int n, int delta) {
    auto v = mhc::validity(n, delta);
    return py::make_tuple(v.valid, mhc::validity_reason_name(v.reason));
  });
  m.def("construct", &mhc::construct, py::arg("n"), py::arg("delta"));
  m.def("build_wheel", &mhc::build_wheel);
  m.def("build_case_odd", &mhc::build_case_odd);
  m.def("build_case_even", &mhc::build_case_even);

  m.def("hamilton_path_exists", &mhc::hamilton_path_exists, py::arg("g"),
        py::arg("u"), py::arg("v"));
  m.def("find_hamilton_path",
        [](const mhc::Graph& g, int u, int v) -> py::object {
          auto path = mhc::find_hamilton_path(g, u, v);
          if (!path) return py::none();
          return py::cast(path->vertices);
        });
  m.def("is_hamiltonian_connected", [](const mhc::Graph& g) {
    auto res = mhc::is_hamiltonian_connected(g);
    py::dict d;
    d["is_hc"] = res.is_hc;
    d["pairs_checked"] = res.pairs_checked;
    d["failing_pair"] =
        res.failing_pair ? py::cast(*res.failing_pair) : py::object(py::none());
    d["pruned_by"] = res.pruned_by
                         ? py::cast(mhc::prune_reason_name(*res.pruned_by))
                         : py::object(py::none());
    return d;
  });

  m.def("is_minimally_hc", [](const mhc::Graph& g) {
    auto verdict = mhc::is_minimally_hc(g);
    py::dict d;
    d["is_hc"] = verdict.is_hc;
    d["is_minimal"] = verdict.is_minimal;
    d["fast_path_used"] = verdict.fast_path_used;
    py::list edges;
    for (const auto& ev : verdict.edge_evidence) {
      py::dict e;
      e["edge"] = ev.edge;
      e["reason"] = mhc::edge_reason_name(ev.reason);
      e["still_hc"] = ev.still_hc;
      edges.append(e);
    }
    d["edges"] = edges;
    return d;
  });
  m.def("fast_minimality_argument",
        [](const mhc::LabeledGraph& lg) -> py::object {
          auto res = mhc::fast_minimality_argument(lg);
          if (!res) return py::none();
          return py::bool_(*res);
        });

  m.def("dispatch", [](const mhc::LabeledGraph& lg, int u, int v) {
    auto d = mhc::dispatch(lg, u, v);
    return py::make_tuple(d.id.label(), d.from, d.to);
  });
  m.def("emit_path", [](const mhc::LabeledGraph& lg, int u, int v) {
    return mhc::emit_path(lg, u, v).vertices;
  });
  m.def("verify_all_pairs", [](const mhc::LabeledGraph& lg) {
    auto rep = mhc::verify_all_pairs(lg);
    py::dict d;
    d["pairs"] = rep.pairs.size();
    d["verified"] = rep.verified_count;
    d["all_verified"] = rep.all_verified;
    return d;
  });

  m.def("enumerate_classes", &mhc::enumerate_classes);
  m.def("survey", [](int n, int workers) { return survey_to_dict(mhc::survey_mhc(n, workers)); },
        py::arg("n"), py::arg("workers") = 1);
  m.def("survey_graph6_lines", [](const std::vector<std::string>& lines, int workers) {
    std::stringstream in;
    for (const auto& line : lines) in << line << "\n";
    return survey_to_dict(mhc::survey_stream(in, {.strict = true}, workers));
  }, py::arg("lines"), py::arg("workers") = 1);
  m.def("hunt_min_degree_4", [](int n) -> py::object {
    auto found = mhc::hunt_min_degree_4(n);
    if (!found) return py::none();
    return py::cast(*found);
  });
  m.def("is_wheel", &mhc::is_wheel);
}
