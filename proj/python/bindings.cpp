#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "invol/classify.hpp"
#include "invol/construct.hpp"
#include "invol/cotree.hpp"
#include "invol/dsl.hpp"
#include "invol/errors.hpp"
#include "invol/graph_io.hpp"
#include "invol/json_io.hpp"
#include "selftest.hpp"

namespace py = pybind11;
using namespace invol;

namespace {

Graph load(const std::string& text, const std::string& fmt) {
  if (fmt == "graph6") return parse_graph6(text);
  if (fmt == "dsl") return parse_block_dsl(text).graph;
  if (fmt == "edges") return parse_edge_list(text);
  throw py::value_error("format must be 'graph6', 'dsl' or 'edges'");
}

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw py::value_error("matrix must be square");
    for (int j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

std::vector<std::vector<double>> to_rows(const Matrix& a) {
  std::vector<std::vector<double>> rows(a.order(), std::vector<double>(a.order()));
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) rows[i][j] = a(i, j);
  return rows;
}

Tolerances tolerances(double involution, double zero) {
  Tolerances t;
  t.involution = involution;
  t.zero = zero;
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal multiplicity bipartitions: classification and witnesses";

  py::register_exception<NotConstructible>(m, "NotConstructible");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const PreconditionError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "classify",
      [](const std::string& g, const std::string& fmt) {
        return to_py(to_json(classify(load(g, fmt))));
      },
      py::arg("graph"), py::arg("format") = "graph6");

  m.def(
      "construct",
      [](const std::string& g, const std::string& fmt, double tol_inv,
         double tol_zero) {
        const Graph graph = load(g, fmt);
        const Construction c = construct(graph, classify(graph));
        Json j = witness_json(c, std::nullopt);
        j["verify"] = to_json(verify_construction(c, graph, tolerances(tol_inv, tol_zero)));
        py::dict d = to_py(j);
        d["matrix"] = to_rows(c.matrix);
        if (c.adjacency_form) d["raw_matrix"] = to_rows(*c.adjacency_form);
        return d;
      },
      py::arg("graph"), py::arg("format") = "graph6",
      py::arg("tol_involution") = 1e-8, py::arg("tol_zero") = 1e-10);

  m.def(
      "verify_matrix",
      [](const std::vector<std::vector<double>>& rows, const std::string& g,
         const std::string& fmt, int mult, double tol_inv, double tol_zero) {
        return to_py(to_json(verify_matrix(to_matrix(rows), load(g, fmt), mult,
                                           tolerances(tol_inv, tol_zero))));
      },
      py::arg("matrix"), py::arg("graph"), py::arg("format") = "graph6",
      py::arg("mult") = 2, py::arg("tol_involution") = 1e-8,
      py::arg("tol_zero") = 1e-10);

  m.def(
      "cotree",
      [](const std::string& g, const std::string& fmt) -> py::object {
        const auto r = build_cotree(load(g, fmt));
        if (const auto* t = std::get_if<Cotree>(&r)) return to_py(to_json(*t));
        return py::none();
      },
      py::arg("graph"), py::arg("format") = "graph6");

  m.def(
      "unique_path_bound",
      [](const std::string& g, const std::string& fmt) {
        return unique_path_bound(load(g, fmt));
      },
      py::arg("graph"), py::arg("format") = "graph6");

  m.def(
      "graph6_decode",
      [](const std::string& s) {
        const Graph g = parse_graph6(s);
        return std::make_pair(g.order(), g.edges());
      },
      py::arg("graph6"));

  m.def(
      "graph6_encode",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [a, b] : edges) {
          if (a < 0 || b < 0 || a >= n || b >= n)
            throw py::value_error("edge endpoint out of range");
          g.add_edge(a, b);
        }
        return encode_graph6(g);
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "selftest",
      [](int max_n, std::uint64_t seed, int random_shapes) {
        SelftestOptions o;
        o.max_n = max_n;
        o.seed = seed;
        o.random_shapes = random_shapes;
        const SelftestReport r = run_selftest(o);
        py::dict d;
        d["graphs"] = r.graphs;
        d["connected_graphs"] = r.connected;
        d["agreements"] = r.agreements;
        d["witnesses_verified"] = r.constructions;
        d["random_shapes"] = r.random_shapes;
        d["failures"] = r.failures;
        d["ok"] = r.ok();
        return d;
      },
      py::arg("max_n") = 5, py::arg("seed") = 1, py::arg("random_shapes") = 50);
}
