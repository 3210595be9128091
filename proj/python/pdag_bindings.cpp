#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pdag/error.hpp"
#include "pdag/extension.hpp"
#include "pdag/generators.hpp"
#include "pdag/graph.hpp"
#include "pdag/io.hpp"
#include "pdag/orientation.hpp"

namespace py = pybind11;
using namespace pdag;

namespace {

ExtensionAlgorithm algorithm_from(const std::string& name) {
    const auto algo = parse_extension_algorithm(name);
    if (!algo) throw UsageError("unknown extension algorithm '" + name + "'");
    return *algo;
}

Pdag from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs,
                const std::vector<std::pair<VertexId, VertexId>>& undirected) {
    Pdag g(n);
    for (const auto& [u, v] : arcs) g.add_arc(u, v);
    for (const auto& [u, v] : undirected) g.add_undirected(u, v);
    return g;
}

std::vector<std::pair<VertexId, VertexId>> pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.from, e.to);
    return out;
}

py::dict ce_result(const CeOrientationResult& r) {
    py::dict d;
    d["graph"] = r.graph;
    d["extension_us"] = r.timings.extension_us;
    d["cpdag_us"] = r.timings.cpdag_us;
    d["meek_us"] = r.timings.meek_us;
    d["adjacency_tests"] = r.counters.adjacency_tests;
    d["potential_sink_checks"] = r.counters.potential_sink_checks;
    d["seeded_arcs"] = r.seeded_arcs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pdagext, m) {
    m.doc() = "Consistent extensions and maximal orientations of partially directed graphs";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InvalidInput>(m, "NotExtendableError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Pdag>(m, "Pdag")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init(&from_edges), py::arg("n"), py::arg("arcs"), py::arg("undirected") = std::vector<std::pair<VertexId, VertexId>>{})
        .def("add_arc", &Pdag::add_arc)
        .def("add_undirected", &Pdag::add_undirected)
        .def("adjacency", [](const Pdag& g, VertexId u, VertexId v) { return std::string(to_string(g.adjacency(u, v))); })
        .def_property_readonly("n", &Pdag::vertex_count)
        .def_property_readonly("arc_count", &Pdag::arc_count)
        .def_property_readonly("undirected_count", &Pdag::undirected_count)
        .def("arcs", [](const Pdag& g) { return pairs(g.arcs()); })
        .def("undirected_edges", [](const Pdag& g) { return pairs(g.undirected_edges()); })
        .def("is_acyclic", [](const Pdag& g) { return validate(g).ok(); })
        .def("v_structures", [](const Pdag& g) {
            std::vector<std::tuple<VertexId, VertexId, VertexId>> out;
            for (const VStructure& s : v_structures(g)) out.emplace_back(s.left, s.center, s.right);
            return out;
        })
        .def("__eq__", [](const Pdag& a, const Pdag& b) { return a == b; })
        .def("__str__", [](const Pdag& g) { return format_edge_list(g); });

    m.def("parse", [](const std::string& text) { return parse_edge_list(std::string_view(text)); },
          py::arg("text"), "Parse the edge-list text format");
    m.def("format", [](const Pdag& g) { return format_edge_list(g); }, py::arg("graph"));

    m.def(
        "extend",
        [](const Pdag& g, const std::string& algo) -> py::object {
            const ExtensionOutcome out = extend(g, algorithm_from(algo));
            if (!out.extended()) return py::none();
            return py::cast(out.extension->dag.graph());
        },
        py::arg("graph"), py::arg("algo") = "dtic",
        "Consistent DAG extension, or None if the graph has none");
    m.def(
        "is_consistent_extension",
        [](const Pdag& g, const Pdag& d) {
            if (d.undirected_count() != 0 || !validate(d).ok()) return false;
            return is_consistent_extension(g, Dag(d));
        },
        py::arg("graph"), py::arg("dag"));
    m.def(
        "direct_meek", [](const Pdag& g, bool naive) { return naive ? direct_meek_naive(g).graph : direct_meek(g).graph; },
        py::arg("graph"), py::arg("naive") = false, "Maximal orientation by Meek-rule closure");
    m.def(
        "maximal_orientation_ce",
        [](const Pdag& g, const std::string& extender) { return ce_result(maximal_orientation_ce(g, algorithm_from(extender))); },
        py::arg("graph"), py::arg("extender") = "dtic",
        "Maximal orientation through a consistent extension, with phase timings");
    m.def("dag_to_cpdag", [](const Pdag& d) { return dag_to_cpdag(Dag(d)); }, py::arg("dag"));
    m.def("brute_force_mpdag", &brute_force_mpdag, py::arg("graph"));

    m.def(
        "generate",
        [](const std::string& style, std::size_t n, const std::string& edges, const std::string& k,
           std::uint64_t seed, std::size_t background_min, std::size_t background_max) {
            GeneratorConfig cfg;
            const auto s = parse_graph_style(style);
            if (!s) throw UsageError("unknown style '" + style + "'");
            cfg.style = *s;
            cfg.n = n;
            cfg.edges = EdgeRule::parse(edges);
            cfg.k = ScaleRule::parse(k);
            cfg.seed = seed;
            cfg.background_min = background_min;
            cfg.background_max = background_max;
            return generate(cfg).graph;
        },
        py::arg("style") = "uniform", py::arg("n") = 0, py::arg("edges") = "3n", py::arg("k") = "3",
        py::arg("seed") = 0, py::arg("background_min") = 2, py::arg("background_max") = 5);
    m.def("dth_worst_case", &dth_worst_case, py::arg("k"));
}
