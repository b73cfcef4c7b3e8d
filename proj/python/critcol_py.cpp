#include "critcol/chromatic.hpp"
#include "critcol/criticality.hpp"
#include "critcol/dimacs.hpp"
#include "critcol/error.hpp"
#include "critcol/hfree.hpp"
#include "critcol/reductions.hpp"
#include "critcol/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace critcol;

namespace {

using EdgeTuple = std::pair<Vertex, Vertex>;

std::vector<EdgeTuple> to_tuples(const std::vector<Edge>& es)
{
    std::vector<EdgeTuple> out;
    out.reserve(es.size());
    for (const Edge& e : es)
        out.emplace_back(e.u, e.v);
    return out;
}

Graph make_graph(int n, const std::vector<EdgeTuple>& edges, std::vector<std::string> labels)
{
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges)
        es.emplace_back(u, v);
    return Graph::from_edges(n, es, std::move(labels));
}

ScanOptions scan_options(int jobs, int cap)
{
    ScanOptions o;
    o.jobs = jobs;
    o.chi.exact.max_vertices = cap;
    return o;
}

Formula make_formula(const std::vector<std::array<int, 3>>& clauses)
{
    // 1-indexed on the Python side, like the file format
    Formula f;
    f.n = static_cast<int>(clauses.size());
    for (auto c : clauses) {
        for (int& x : c)
            --x;
        f.clauses.push_back(c);
    }
    if (auto v = validate(f); !v.empty())
        throw FormulaError(std::move(v));
    return f;
}

std::vector<std::array<int, 3>> formula_clauses(const Formula& f)
{
    auto out = f.clauses;
    for (auto& c : out) {
        for (int& x : c)
            ++x;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_critcol, m)
{
    m.doc() = "Critical vertices and edges under chromatic number; reduction generators and checks.";

    auto base = py::register_exception<Error>(m, "CritcolError", PyExc_RuntimeError);
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<GenerationError>(m, "GenerationError", base.ptr());
    py::register_exception<FormulaError>(m, "FormulaError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{},
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return to_tuples(g.edges()); })
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("label", &Graph::label)
        .def_property_readonly("labels", &Graph::labels)
        .def(py::self == py::self)
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    // graph operations
    m.def("delete_vertex", &delete_vertex);
    m.def("delete_edge", [](const Graph& g, EdgeTuple e) { return delete_edge(g, {e.first, e.second}); });
    m.def("contract_edge", [](const Graph& g, EdgeTuple e) { return contract_edge(g, {e.first, e.second}); });
    m.def("complement", &complement);
    m.def("disjoint_union", &disjoint_union);
    m.def("join", &join);
    m.def("induced_subgraph",
          [](const Graph& g, const std::vector<Vertex>& vs) { return induced_subgraph(g, vs); });
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("empty_graph", &empty_graph);
    m.def("grotzsch", &grotzsch);
    m.def("named_pattern", &named_pattern, "Small graph by name: P4, C5, K13, paw, 2P1+P2, co-2P1+P2, ...");

    // DIMACS
    m.def("read_dimacs", &dimacs::read_file, py::arg("path"));
    m.def("parse_dimacs", &dimacs::parse, py::arg("text"));
    m.def("to_dimacs", &dimacs::to_string, py::arg("graph"), py::arg("comment") = "");

    // coloring
    py::class_<ColoringResult>(m, "ColoringResult")
        .def_readonly("chi", &ColoringResult::chi)
        .def_readonly("coloring", &ColoringResult::coloring)
        .def_property_readonly("method", [](const ColoringResult& r) { return std::string(to_string(r.method)); })
        .def("__repr__", [](const ColoringResult& r) {
            return "ColoringResult(chi=" + std::to_string(r.chi) + ", method=" + std::string(to_string(r.method)) + ")";
        });
    m.def(
        "chi",
        [](const Graph& g, int cap, bool allow_polynomial) {
            ChiOptions o;
            o.exact.max_vertices = cap;
            o.allow_polynomial = allow_polynomial;
            return chi(g, o);
        },
        py::arg("graph"), py::arg("cap") = 64, py::arg("allow_polynomial") = true,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "chi_exact", [](const Graph& g, int cap) { return chi_exact(g, ExactOptions{cap}); }, py::arg("graph"),
        py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());
    m.def("chi_bruteforce", &chi_bruteforce);
    m.def(
        "clique_cover",
        [](const Graph& g, int cap) { return clique_cover_number(g, ExactOptions{cap}).cliques; },
        py::arg("graph"), py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>(),
        "Minimum clique cover as a list of cliques; its length is sigma.");
    m.def("is_cograph", [](const Graph& g) { return recognize_cograph(g).has_value(); });

    // induced subgraphs and classification
    m.def("contains_induced", &contains_induced, py::arg("graph"), py::arg("pattern"));
    m.def("find_induced", &find_induced, py::arg("graph"), py::arg("pattern"));
    m.def("is_linear_forest", &is_linear_forest);
    m.def("classify_h", [](const Graph& h) {
        const HClassification c = classify_h(h);
        return std::make_pair(std::string(to_string(c.verdict)), std::string(to_string(c.rule)));
    });

    // criticality
    m.def(
        "critical_vertices", [](const Graph& g, int jobs, int cap) { return critical_vertices(g, scan_options(jobs, cap)); },
        py::arg("graph"), py::arg("jobs") = 0, py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());
    m.def(
        "critical_edges",
        [](const Graph& g, int jobs, int cap) { return to_tuples(critical_edges(g, scan_options(jobs, cap))); },
        py::arg("graph"), py::arg("jobs") = 0, py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());
    m.def(
        "contraction_critical_edges",
        [](const Graph& g, int jobs, int cap) {
            return to_tuples(contraction_critical_edges(g, scan_options(jobs, cap)));
        },
        py::arg("graph"), py::arg("jobs") = 0, py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());
    m.def(
        "has_critical_vertex",
        [](const Graph& g, int jobs, int cap) { return has_critical_vertex(g, scan_options(jobs, cap)); },
        py::arg("graph"), py::arg("jobs") = 0, py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());
    m.def(
        "has_critical_edge", [](const Graph& g, int jobs, int cap) { return has_critical_edge(g, scan_options(jobs, cap)); },
        py::arg("graph"), py::arg("jobs") = 0, py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());
    m.def(
        "has_contraction_critical_edge",
        [](const Graph& g, int jobs, int cap) { return has_contraction_critical_edge(g, scan_options(jobs, cap)); },
        py::arg("graph"), py::arg("jobs") = 0, py::arg("cap") = 64, py::call_guard<py::gil_scoped_release>());

    // formulas and reductions
    py::class_<Formula>(m, "Formula")
        .def(py::init(&make_formula), py::arg("clauses"), "Clauses as triples of 1-indexed variables.")
        .def_readonly("n", &Formula::n)
        .def_property_readonly("clauses", &formula_clauses)
        .def(py::self == py::self)
        .def("__str__", [](const Formula& f) { return to_string(f); });
    m.def("parse_formula", &parse_formula, py::arg("text"));
    m.def("read_formula", &read_formula_file, py::arg("path"));
    m.def("random_formula", &random_formula, py::arg("n"), py::arg("seed"));
    m.def("oracle_1in3", &oracle_1in3, py::arg("formula"), py::call_guard<py::gil_scoped_release>(),
          "A 1-in-3 assignment (list of bools) or None.");
    m.def("clique_proof_instance", &build_clique_proof_instance, py::arg("graph"), py::arg("ell"));
    m.def("grotzsch_instance", &build_grotzsch_instance, py::arg("graph"));
    m.def(
        "vertex_gadget",
        [](const Formula& f, bool complement) {
            const GadgetGraph gg = build_vertex_gadget(f);
            return complement ? to_target_instance(gg) : gg.graph;
        },
        py::arg("formula"), py::arg("complement") = false);
    m.def(
        "edge_gadget",
        [](const Formula& f, bool complement) {
            const GadgetGraph gg = build_edge_gadget(f);
            return complement ? to_target_instance(gg) : gg.graph;
        },
        py::arg("formula"), py::arg("complement") = false);

    // verification suites
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed, int jobs, int samples, int n, int max_n,
           const std::filesystem::path& out_dir) {
            const auto s = verify::parse_suite(suite);
            if (!s)
                throw ArgumentError("unknown suite `" + suite + "`");
            verify::Options o;
            o.seed = seed;
            o.jobs = jobs;
            o.samples = samples;
            o.n = n;
            o.max_n = max_n;
            o.out_dir = out_dir;
            verify::Report r;
            {
                py::gil_scoped_release release;
                r = verify::run(*s, o);
            }
            py::dict d;
            d["schema"] = 1;
            d["suite"] = r.suite;
            d["run"] = r.run;
            d["passed"] = r.passed;
            py::list cx;
            for (const auto& c : r.counterexamples)
                cx.append(py::make_tuple(c.description, c.file.string()));
            d["counterexamples"] = cx;
            d["capped"] = r.capped;
            d["notes"] = r.notes;
            d["wall_seconds"] = r.wall_seconds;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("jobs") = 0, py::arg("samples") = 0, py::arg("n") = 0,
        py::arg("max_n") = 6, py::arg("out_dir") = "counterexamples");
}
