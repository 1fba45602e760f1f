#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kecrit/analysis.hpp"
#include "kecrit/critical.hpp"
#include "kecrit/matching.hpp"
#include "kecrit/oracle.hpp"

namespace py = pybind11;
using namespace kecrit;

namespace {

// Vertex sets cross the boundary as label lists in vertex order.
using Labels = std::vector<std::string>;

Labels names(const Graph& g, const VertexSet& s) { return g.labels_of(s); }

VertexSet resolve(const Graph& g, const Labels& labels) { return g.vertices(labels); }

Format parse_format(const std::string& name) {
  const auto f = format_from_name(name);
  if (!f) throw std::invalid_argument("unknown format '" + name + "'");
  return *f;
}

py::dict check_to_dict(const Graph& g, const TheoremCheck& c) {
  py::dict d;
  d["id"] = c.id;
  d["statement"] = c.statement;
  d["status"] = std::string(to_string(c.status));
  d["lhs"] = c.lhs ? py::cast(*c.lhs) : py::none();
  d["rhs"] = c.rhs ? py::cast(*c.rhs) : py::none();
  d["witness"] = names(g, c.witness);
  d["detail"] = c.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_kecrit, m) {
  m.doc() = "Critical independent sets, KE graphs and their exact oracles";

  py::register_exception<OracleBoundError>(m, "OracleBoundError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init([](const std::vector<std::pair<std::string, std::string>>& edges,
                       const Labels& isolated) {
             return Graph::from_labeled_edges(edges, isolated);
           }),
           py::arg("edges"), py::arg("isolated") = Labels{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("labels", &Graph::labels)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(g.label(e.u), g.label(e.v));
                               return out;
                             })
      .def("neighbors",
           [](const Graph& g, const std::string& v) {
             const auto idx = g.index_of(v);
             if (!idx) throw py::key_error(v);
             const auto span = g.neighbors(*idx);
             return names(g, VertexSet(std::vector<Vertex>(span.begin(), span.end())));
           })
      .def("difference",
           [](const Graph& g, const Labels& s) { return difference(g, resolve(g, s)); })
      .def("is_independent",
           [](const Graph& g, const Labels& s) { return is_independent(g, resolve(g, s)); })
      .def("to_edge_list", &to_edge_list)
      .def("to_dimacs", &to_dimacs)
      .def("__repr__", [](const Graph& g) {
        return "<kecrit.Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def(
      "parse", [](const std::string& text, const std::string& format) {
        return parse_graph(text, parse_format(format));
      },
      py::arg("text"), py::arg("format") = "edge_list");
  m.def("fixture", &fixture, py::arg("name"));
  m.def(
      "gnp",
      [](std::size_t n, double p, std::uint64_t seed) {
        return generate({.kind = GeneratorKind::gnp, .n = n, .p = p, .seed = seed});
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 0);
  m.def(
      "bipartite_gnp",
      [](std::size_t left, std::size_t right, double p, std::uint64_t seed) {
        return generate({.kind = GeneratorKind::bipartite_gnp,
                         .p = p,
                         .part_sizes = {left, right},
                         .seed = seed});
      },
      py::arg("left"), py::arg("right"), py::arg("p"), py::arg("seed") = 0);
  m.def(
      "disjoint_union",
      [](std::vector<std::size_t> sizes, double p, std::uint64_t seed) {
        return generate({.kind = GeneratorKind::disjoint_union,
                         .p = p,
                         .part_sizes = std::move(sizes),
                         .seed = seed});
      },
      py::arg("sizes"), py::arg("p"), py::arg("seed") = 0);

  m.def("critical_difference", &critical_difference, py::arg("g"));
  m.def(
      "critical_independent_set",
      [](const Graph& g) { return names(g, find_critical_independent_set(g)); }, py::arg("g"));
  m.def(
      "max_critical_independent_set",
      [](const Graph& g) { return names(g, max_critical_independent_set(g)); }, py::arg("g"));
  m.def(
      "diadem", [](const Graph& g) { return names(g, diadem(g)); }, py::arg("g"));
  m.def(
      "extends_to_critical_independent",
      [](const Graph& g, const Labels& j) {
        return extends_to_critical_independent(g, resolve(g, j));
      },
      py::arg("g"), py::arg("subset"));
  m.def(
      "decompose",
      [](const Graph& g) {
        const Decomposition d = decompose(g);
        py::dict out;
        out["I"] = names(g, d.witness);
        out["X"] = names(g, d.x);
        out["Xc"] = names(g, d.complement);
        return out;
      },
      py::arg("g"));
  m.def(
      "matching",
      [](const Graph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Edge& e : max_matching_general(g).edges()) out.emplace_back(g.label(e.u), g.label(e.v));
        return out;
      },
      py::arg("g"));
  m.def(
      "matching_number", [](const Graph& g) { return max_matching_general(g).size(); },
      py::arg("g"));

  m.def(
      "independence_profile",
      [](const Graph& g, std::size_t bound) {
        const auto p = independence_profile(g, {.bound = bound});
        py::dict out;
        out["alpha"] = p.alpha;
        py::list omega;
        for (const auto& s : p.omega) omega.append(names(g, s));
        out["omega"] = omega;
        out["core"] = names(g, p.core);
        out["corona"] = names(g, p.corona);
        return out;
      },
      py::arg("g"), py::arg("bound") = 20);
  m.def(
      "critical_family",
      [](const Graph& g, std::size_t bound) {
        const auto f = critical_family(g, {.bound = bound});
        py::dict out;
        out["d"] = f.d;
        py::list maxima;
        for (const auto& s : f.maximum_critical_independent) maxima.append(names(g, s));
        out["maximum_critical_independent"] = maxima;
        out["ker"] = names(g, f.ker);
        out["nucleus"] = names(g, f.nucleus);
        out["diadem"] = names(g, f.diadem);
        return out;
      },
      py::arg("g"), py::arg("bound") = 20);
  m.def(
      "ke_verdicts",
      [](const Graph& g, std::size_t bound) {
        const KEVerdicts v = ke_verdicts(g, {.bound = bound});
        py::dict out;
        out["by_definition"] = v.by_definition;
        out["by_all_mis_critical"] = v.by_all_mis_critical;
        out["by_diadem_corona"] = v.by_diadem_corona;
        out["by_counting"] = v.by_counting;
        return out;
      },
      py::arg("g"), py::arg("bound") = 20);
  m.def(
      "verify_theorems",
      [](const Graph& g, std::size_t bound) {
        py::list out;
        for (const auto& c : verify_theorems(g, {.bound = bound})) out.append(check_to_dict(g, c));
        return out;
      },
      py::arg("g"), py::arg("bound") = 20);
  m.def(
      "verify_fast_paths",
      [](const Graph& g, std::size_t bound) {
        py::list out;
        for (const auto& c : verify_fast_paths(g, {.bound = bound})) out.append(check_to_dict(g, c));
        return out;
      },
      py::arg("g"), py::arg("bound") = 20);
  m.def(
      "analyze_json",
      [](const Graph& g, std::size_t oracle_bound, bool include_checks) {
        py::gil_scoped_release release;
        return report_to_json(
            analyze(g, {.oracle_bound = oracle_bound, .include_checks = include_checks}), -1);
      },
      py::arg("g"), py::arg("oracle_bound") = 20, py::arg("include_checks") = true);
}
