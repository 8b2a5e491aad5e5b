#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spex/bounds.hpp"
#include "spex/canonical.hpp"
#include "spex/certify.hpp"
#include "spex/constructions.hpp"
#include "spex/report.hpp"
#include "spex/spectra.hpp"

namespace py = pybind11;
using namespace spex;

namespace {

// JSON goes through Python's own parser so reports arrive as plain dicts.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list int_coefficients(const IntPoly& p) {
    py::list out;
    for (const BigInt& c : p.coefficients()) out.append(py::int_(py::str(c.str())));
    return out;
}

CertificationReport certify_by_name(const std::string& theorem, int parameter, int k, int jobs) {
    if (theorem == "nosal") return certify_nosal(parameter, jobs);
    if (theorem == "lnw") return certify_lnw_sum(parameter, jobs);
    if (theorem == "thm15") return certify_thm15(parameter, jobs);
    if (theorem == "zhai-shu") return certify_zhai_shu(parameter, jobs);
    if (theorem == "main") return certify_main(parameter, jobs);
    if (theorem == "mantel") return certify_mantel(parameter, jobs);
    if (theorem == "erdos") return certify_erdos(parameter, jobs);
    if (theorem == "conj51") return certify_conj51(parameter, k, jobs);
    throw std::invalid_argument("unknown theorem: " + theorem);
}

}  // namespace

PYBIND11_MODULE(_spex, m) {
    m.doc() = "Spectral extremal graph toolkit";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> e;
                 for (auto [u, v] : edges) e.push_back({u, v});
                 return Graph(n, e);
             }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + to_graph6(g) + ", n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("cycle", &cycle);
    m.def("path", &path);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("star", &star);
    m.def("sk", &sk);
    m.def("s_odd", &s_odd);
    m.def("star_plus_edge", &star_plus_edge);
    m.def("book", &book);

    m.def("canonical_form", &canonical_form);
    m.def("isomorphic", &isomorphic);
    m.def("is_triangle_free", &is_triangle_free);
    m.def("is_bipartite", &is_bipartite);
    m.def("odd_girth", [](const Graph& g) -> py::object {
        const int k = odd_girth(g);
        return k == kInfiniteGirth ? py::object(py::none()) : py::int_(k);
    });
    m.def("triangle_count", &triangle_count);

    m.def("eigenvalues", [](const Graph& g, double tol) { return eigenvalues(g, tol).values; }, py::arg("g"),
          py::arg("tol") = kDefaultTol);
    m.def("spectral_radius", &spectral_radius, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("char_poly", [](const Graph& g) { return int_coefficients(char_poly(g)); },
          "Integer coefficients of det(xI - A), ascending powers.");

    m.def("beta", [](int m) { return spex::beta(m); });
    m.def("gamma", [](int m) { return spex::gamma(m); });

    m.def("enumerate",
          [](int edges, bool connected, bool triangle_free, bool c5_free, bool non_bipartite, int odd_girth_min,
             int jobs) {
              ClassFilter f{edges, connected, triangle_free, c5_free, non_bipartite, odd_girth_min};
              std::vector<std::string> out;
              {
                  py::gil_scoped_release release;
                  for (const Graph& g : spex::enumerate(f, jobs)) out.push_back(to_graph6(g));
              }
              return out;
          },
          py::arg("m"), py::arg("connected") = false, py::arg("triangle_free") = false, py::arg("c5_free") = false,
          py::arg("non_bipartite") = false, py::arg("odd_girth_min") = 0, py::arg("jobs") = 1);

    m.def("certify",
          [](const std::string& theorem, int parameter, int k, int jobs) {
              CertificationReport r;
              {
                  py::gil_scoped_release release;
                  r = certify_by_name(theorem, parameter, k, jobs);
              }
              return to_python(to_json(r));
          },
          py::arg("theorem"), py::arg("parameter"), py::arg("k") = 3, py::arg("jobs") = 1);

    m.def("explore_booksize",
          [](int edges, int jobs) {
              BooksizeReport r;
              {
                  py::gil_scoped_release release;
                  r = explore_booksize(edges, jobs);
              }
              return to_python(to_json(r));
          },
          py::arg("m"), py::arg("jobs") = 1);
}
