#include "critcol/criticality.hpp"
#include "critcol/random_graphs.hpp"
#include "critcol/reductions.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace critcol;

namespace {

std::vector<Edge> all_edges(const Graph& g) { return g.edges(); }

std::vector<Vertex> all_vertices(const Graph& g)
{
    std::vector<Vertex> v(g.order());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("critical vertices, fixed cases")
{
    CHECK(critical_vertices(complete_graph(5)) == all_vertices(complete_graph(5)));
    CHECK(critical_vertices(disjoint_union(complete_graph(3), complete_graph(3))).empty());
    CHECK(critical_vertices(path_graph(4)).empty());
    CHECK(critical_vertices(cycle_graph(5)) == all_vertices(cycle_graph(5)));
    CHECK(has_critical_vertex(path_graph(1)));
    CHECK_FALSE(has_critical_vertex(Graph{}));
}

TEST_CASE("critical edges, fixed cases")
{
    CHECK(critical_edges(complete_graph(2)) == std::vector<Edge>{{0, 1}});
    CHECK(critical_edges(cycle_graph(4)).empty());
    CHECK(critical_edges(cycle_graph(5)) == all_edges(cycle_graph(5)));
    CHECK(contraction_critical_edges(cycle_graph(4)).empty());
    CHECK(contraction_critical_edges(cycle_graph(5)) == all_edges(cycle_graph(5)));
    CHECK_FALSE(has_critical_edge(empty_graph(3)));
}

TEST_CASE("scan agrees with the brute-force oracle")
{
    Rng rng(47);
    for (int i = 0; i < 150; ++i) {
        const Graph g = random_graph(1 + i % 8, 0.2 + 0.6 * (i % 5) / 4.0, rng);
        ScanOptions opts;
        opts.jobs = 1 + i % 3;
        const CriticalityReport r = scan_criticality(g, opts);
        CHECK(r.chi == chi_bruteforce(g));
        CHECK(*r.critical_vertices == oracle::critical_vertices(g));
        CHECK(*r.critical_edges == oracle::critical_edges(g));
        CHECK(*r.contraction_critical_edges == oracle::contraction_critical_edges(g));
        // an edge is critical iff it is contraction-critical
        CHECK(*r.critical_edges == *r.contraction_critical_edges);
        CHECK(has_critical_vertex(g, opts) == !r.critical_vertices->empty());
        CHECK(has_critical_edge(g, opts) == !r.critical_edges->empty());
        CHECK(has_contraction_critical_edge(g, opts) == !r.contraction_critical_edges->empty());
    }
}

TEST_CASE("witnesses certify each critical element")
{
    const Graph g = cycle_graph(5);
    ScanOptions opts;
    opts.keep_witnesses = true;
    const CriticalityReport r = scan_criticality(g, opts);
    REQUIRE(r.vertex_witnesses.size() == 5);
    REQUIRE(r.edge_witnesses.size() == 5);
    REQUIRE(r.contraction_witnesses.size() == 5);
    for (const auto& [v, c] : r.vertex_witnesses)
        CHECK(is_valid_coloring(delete_vertex(g, v), c, 2));
    for (const auto& [e, c] : r.edge_witnesses)
        CHECK(is_valid_coloring(delete_edge(g, e), c, 2));
    for (const auto& [e, c] : r.contraction_witnesses)
        CHECK(is_valid_coloring(contract_edge(g, e), c, 2));
}

TEST_CASE("scan options select element kinds")
{
    ScanOptions opts;
    opts.vertices = false;
    opts.contraction = false;
    const CriticalityReport r = scan_criticality(cycle_graph(5), opts);
    CHECK_FALSE(r.critical_vertices.has_value());
    CHECK(r.critical_edges.has_value());
    CHECK_FALSE(r.contraction_critical_edges.has_value());

    ScanOptions reuse;
    reuse.assume_prop1 = true;
    const CriticalityReport p = scan_criticality(cycle_graph(5), reuse);
    CHECK(*p.contraction_critical_edges == *p.critical_edges);
}

TEST_CASE("results do not depend on the thread count")
{
    const Graph g = build_grotzsch_instance(cycle_graph(5));
    ScanOptions one;
    one.jobs = 1;
    ScanOptions four;
    four.jobs = 4;
    const CriticalityReport a = scan_criticality(g, one);
    const CriticalityReport b = scan_criticality(g, four);
    CHECK(a.critical_vertices == b.critical_vertices);
    CHECK(a.critical_edges == b.critical_edges);
    CHECK(a.contraction_critical_edges == b.contraction_critical_edges);
}

TEST_CASE("clique-proof instances")
{
    // C5 with l = 3: 14 vertices, chi 4, the K4 copy carries the critical elements
    const Graph g = build_clique_proof_instance(cycle_graph(5), 3);
    CHECK(g.order() == 14);
    CHECK(chi(g).chi == 4);
    const auto cc = contraction_critical_edges(g);
    CHECK(cc.size() == 6);
    for (const Edge& e : cc)
        CHECK(e.u >= 10);
    CHECK(critical_vertices(g) == std::vector<Vertex>{10, 11, 12, 13});

    // K4 with l = 3: chi 4 but two K4 copies shield every element
    const Graph h = build_clique_proof_instance(complete_graph(4), 3);
    CHECK(chi(h).chi == 4);
    CHECK_FALSE(has_critical_vertex(h));
    CHECK_FALSE(has_contraction_critical_edge(h));
    CHECK_FALSE(has_critical_edge(h));

    // empty G, l = 1: K2 plus isolated vertices
    const Graph k = build_clique_proof_instance(empty_graph(3), 1);
    CHECK(has_critical_edge(k));
}

TEST_CASE("Grötzsch instances")
{
    const Graph c5 = build_grotzsch_instance(cycle_graph(5));
    CHECK(c5.order() == 21);
    CHECK_FALSE(oracle::contains_induced(c5, cycle_graph(3)));
    CHECK(chi(c5).chi == 4);
    CHECK(has_critical_vertex(c5));
    CHECK(has_contraction_critical_edge(c5));

    const Graph k2 = build_grotzsch_instance(path_graph(2));
    CHECK(chi(k2).chi == 4);
    CHECK(has_critical_vertex(k2));

    const Graph f = build_grotzsch_instance(grotzsch());
    CHECK_FALSE(has_critical_vertex(f));
    CHECK_FALSE(has_contraction_critical_edge(f));
}
