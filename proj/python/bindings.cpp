#include "ispoly/clone_calculus.hpp"
#include "ispoly/cnf.hpp"
#include "ispoly/errors.hpp"
#include "ispoly/graph.hpp"
#include "ispoly/graph_io.hpp"
#include "ispoly/interpolation.hpp"
#include "ispoly/isp_eval.hpp"
#include "ispoly/oracle.hpp"
#include "ispoly/report.hpp"
#include "ispoly/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace ispoly;

namespace {

// Exact values cross the boundary as fractions.Fraction and Python ints.
// Inputs may be int, Fraction or a "p/q" string; floats are refused.
Rational to_rational(const py::handle& value)
{
    if (py::isinstance<py::float_>(value))
        throw DomainError("floating-point values are not exact; pass a Fraction, int or \"p/q\" string");
    return Rational::parse(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& value)
{
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(value.numerator().get_str())), py::int_(py::str(value.denominator().get_str())));
}

py::int_ to_int(const Integer& value) { return py::int_(py::str(value.get_str())); }

py::list to_fractions(const Polynomial& p)
{
    py::list out;
    for (const auto& c : p.coefficients())
        out.append(to_fraction(c));
    return out;
}

py::object to_python(const Json& doc)
{
    return py::module_::import("json").attr("loads")(doc.dump());
}

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    std::vector<Edge> es;
    for (const auto& [u, v] : edges)
        es.push_back({u, v});
    return Graph(n, std::move(es));
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

DeltaMode parse_mode(const std::string& mode)
{
    if (mode == "verified")
        return DeltaMode::verified_minimal;
    if (mode == "paper")
        return DeltaMode::paper_formula;
    throw DomainError("mode must be \"verified\" or \"paper\"");
}

} // namespace

PYBIND11_MODULE(_ispoly, m)
{
    m.doc() = "Exact independent set polynomial toolkit";

    // Translators registered later are tried first, so bases go first.
    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<IoError>(m, "IoError", error.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
        .def_static("parse", [](const std::string& text) { return parse_graph(text); },
                    "From the text format or the JSON object format.")
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", &edge_list)
        .def_property_readonly("labels",
                               [](const Graph& g) {
                                   std::vector<std::optional<long>> out;
                                   for (const auto& l : g.labels())
                                       out.push_back(l ? std::optional<long>(l->to_dimacs()) : std::nullopt);
                                   return out;
                               })
        .def("has_edge", &Graph::has_edge)
        .def("to_text", &format_graph_text)
        .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("isp_eval", [](const Graph& g, const py::object& x) { return to_fraction(isp_eval(g, to_rational(x))); },
          py::arg("g"), py::arg("x"));
    m.def("isp_multivariate",
          [](const Graph& g, const py::list& weights) {
              std::vector<Rational> w;
              for (const auto& item : weights)
                  w.push_back(to_rational(item));
              return to_fraction(isp_multivariate(g, w));
          },
          py::arg("g"), py::arg("weights"));
    m.def("isp_coeffs", [](const Graph& g) { return to_fractions(isp_coeffs(g)); }, py::arg("g"));
    m.def("count_is_of_size", [](const Graph& g, std::size_t k) { return to_int(count_is_of_size(g, k)); },
          py::arg("g"), py::arg("k"));

    m.def("s_clone", [](const Graph& g, std::vector<std::size_t> s) { return s_clone(g, CloneSpec(std::move(s))); },
          py::arg("g"), py::arg("S"));
    m.def("k_clone", &k_clone, py::arg("g"), py::arg("k"));
    m.def("comb", &comb, py::arg("g"), py::arg("k"));
    m.def("attach_path", &attach_path, py::arg("g"), py::arg("v"), py::arg("k"));
    m.def("delete_vertex", &delete_vertex, py::arg("g"), py::arg("v"));

    m.def("path_weights",
          [](const py::object& x, std::size_t k) {
              PathWeights w = path_weights(to_rational(x), k);
              return py::make_tuple(to_fraction(w.b), to_fraction(w.c));
          },
          py::arg("x"), py::arg("k"));
    m.def("is_nondegenerate", [](const py::object& x) { return is_nondegenerate(to_rational(x)); }, py::arg("x"));
    m.def("x_of_S",
          [](const py::object& x, std::vector<std::size_t> s) {
              return to_fraction(x_of_S(to_rational(x), CloneSpec(std::move(s))));
          },
          py::arg("x"), py::arg("S"));
    m.def("clone_factor",
          [](const py::object& x, std::vector<std::size_t> s, std::size_t n) {
              return to_fraction(clone_factor(to_rational(x), CloneSpec(std::move(s)), n));
          },
          py::arg("x"), py::arg("S"), py::arg("n"));
    m.def("normalize_point", [](const py::object& x) { return to_python(to_json(normalize_point(to_rational(x)))); },
          py::arg("x"));
    m.def("apply_normalization",
          [](const Graph& g, const py::object& x) {
              TransformPlan plan = normalize_point(to_rational(x));
              return py::make_tuple(apply_plan(g, plan), to_fraction(plan.factor(g.vertex_count())),
                                    to_fraction(plan.target_point));
          },
          py::arg("g"), py::arg("x"), "Returns (transformed graph, factor, target point).");

    m.def("clone_family",
          [](const py::object& x, std::size_t n, const std::string& mode) {
              return to_python(to_json(build_clone_family(to_rational(x), n, parse_mode(mode))));
          },
          py::arg("x"), py::arg("n"), py::arg("mode") = "verified");
    m.def("interpolate_coeffs",
          [](const Graph& g, const py::object& x, const std::string& mode, std::optional<std::string> oracle) {
              Rational point = to_rational(x);
              DeltaMode delta = parse_mode(mode);
              Polynomial result;
              if (oracle) {
                  auto external = external_oracle(*oracle);
                  py::gil_scoped_release release;
                  result = interpolate_coeffs(g, point, *external, delta);
              } else {
                  DefinitionalOracle internal;
                  py::gil_scoped_release release;
                  result = interpolate_coeffs(g, point, internal, delta);
              }
              return to_fractions(result);
          },
          py::arg("g"), py::arg("x"), py::arg("mode") = "verified", py::arg("oracle") = py::none(),
          "oracle is a shell command speaking the line protocol; None uses the internal evaluator.");

    m.def("count_sat", [](const std::string& dimacs) { return to_int(count_sat(parse_dimacs(dimacs))); },
          py::arg("dimacs"));
    m.def("count_x3sat", [](const std::string& dimacs) { return to_int(count_x3sat(parse_dimacs(dimacs))); },
          py::arg("dimacs"));
    m.def("sat_count_via_is", [](const std::string& dimacs) { return to_int(sat_count_via_is(parse_dimacs(dimacs))); },
          py::arg("dimacs"));
    m.def("schaefer_reduce", [](const std::string& dimacs) { return to_dimacs(schaefer_reduce(parse_dimacs(dimacs))); },
          py::arg("dimacs"));
    m.def("x3sat_to_graph",
          [](const std::string& dimacs) {
              X3satGraph r = x3sat_to_graph(parse_dimacs(dimacs));
              return py::make_tuple(r.graph, r.target_size, to_int(r.multiplier));
          },
          py::arg("dimacs"), "Returns (graph, target size, multiplier).");

    m.def("verify",
          [](const std::string& suite, std::uint64_t seed) {
              py::list out;
              for (const auto& r : run_suites(suite, seed))
                  out.append(to_python(to_json(r)));
              return out;
          },
          py::arg("suite") = "all", py::arg("seed") = default_verify_seed);
}
