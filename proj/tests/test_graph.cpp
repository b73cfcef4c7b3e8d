#include "critcol/chromatic.hpp"
#include "critcol/error.hpp"
#include "critcol/graph.hpp"
#include "critcol/random_graphs.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace critcol;

TEST_CASE("vertex deletion")
{
    CHECK(delete_vertex(complete_graph(3), 1) == complete_graph(2));
    // P4 a-b-c-d minus b leaves a, c-d
    const Graph g = delete_vertex(path_graph(4), 1);
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}});
    for (Vertex v = 0; v < 5; ++v)
        CHECK(oracle::isomorphic(delete_vertex(cycle_graph(5), v), path_graph(4)));
    CHECK_THROWS_AS(delete_vertex(path_graph(3), 3), ArgumentError);
}

TEST_CASE("edge deletion")
{
    for (const Edge& e : cycle_graph(3).edges())
        CHECK(oracle::isomorphic(delete_edge(cycle_graph(3), e), path_graph(3)));
    CHECK(delete_edge(complete_graph(2), {0, 1}) == empty_graph(2));
    for (const Edge& e : cycle_graph(4).edges())
        CHECK(oracle::isomorphic(delete_edge(cycle_graph(4), e), path_graph(4)));
    CHECK_THROWS_AS(delete_edge(path_graph(3), {0, 2}), ArgumentError);
}

TEST_CASE("edge contraction")
{
    for (const Edge& e : cycle_graph(3).edges())
        CHECK(contract_edge(cycle_graph(3), e) == complete_graph(2));
    for (const Edge& e : cycle_graph(4).edges())
        CHECK(oracle::isomorphic(contract_edge(cycle_graph(4), e), cycle_graph(3)));
    for (int ell = 1; ell <= 5; ++ell) {
        for (const Edge& e : complete_graph(ell + 1).edges())
            CHECK(contract_edge(complete_graph(ell + 1), e) == complete_graph(ell));
    }
    CHECK_THROWS_AS(contract_edge(path_graph(3), {0, 2}), ArgumentError);

    SUBCASE("merged vertex keeps the smaller index and both labels")
    {
        const Graph g = path_graph(3).with_labels({"a", "b", "c"});
        const Graph h = contract_edge(g, {1, 2});
        CHECK(h.order() == 2);
        CHECK(h.adjacent(0, 1));
        CHECK(h.label(0) == "a");
        CHECK(h.label(1).find('b') != std::string::npos);
        CHECK(h.label(1).find('c') != std::string::npos);
    }
}

TEST_CASE("complement")
{
    CHECK(oracle::isomorphic(complement(path_graph(4)), path_graph(4)));
    CHECK(complement(complete_graph(5)) == empty_graph(5));
    // co-(2P1+P2) is the diamond, K4 minus an edge
    const Graph co = complement(disjoint_union(empty_graph(2), path_graph(2)));
    CHECK(co.order() == 4);
    CHECK(co.edge_count() == 5);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(1 + i % 12, 0.5, rng);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() ==
              static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    }
}

TEST_CASE("disjoint union and join")
{
    const Graph c5 = cycle_graph(5);
    const Graph two = disjoint_union(c5, c5);
    CHECK(two.order() == 10);
    CHECK(two.edge_count() == 10);
    CHECK(disjoint_union(Graph{}, c5) == c5);
    CHECK(disjoint_union(c5, Graph{}) == c5);

    CHECK(join(empty_graph(1), empty_graph(1)) == complete_graph(2));
    CHECK(oracle::isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
    const Graph k223 = join(join(empty_graph(2), empty_graph(2)), empty_graph(3));
    CHECK(k223.edge_count() == 4 + 6 + 6);
    CHECK(chi_bruteforce(k223) == 3);
}

TEST_CASE("chromatic laws for union and join")
{
    Rng rng(3);
    for (int i = 0; i < 150; ++i) {
        const Graph a = random_graph(1 + i % 5, 0.5, rng);
        const Graph b = random_graph(1 + (i / 5) % 5, 0.5, rng);
        const int ca = chi_bruteforce(a);
        const int cb = chi_bruteforce(b);
        CHECK(chi_bruteforce(disjoint_union(a, b)) == std::max(ca, cb));
        CHECK(chi_bruteforce(join(a, b)) == ca + cb);
    }
}

TEST_CASE("deletion is monotone and contraction moves chi by at most one")
{
    Rng rng(5);
    for (int i = 0; i < 150; ++i) {
        const Graph g = random_graph(2 + i % 8, 0.45, rng);
        const int c = chi_bruteforce(g);
        for (Vertex v = 0; v < g.order(); ++v) {
            const int d = chi_bruteforce(delete_vertex(g, v));
            CHECK(d <= c);
            CHECK(d >= c - 1);
        }
        for (const Edge& e : g.edges()) {
            const int d = chi_bruteforce(delete_edge(g, e));
            CHECK(d <= c);
            CHECK(d >= c - 1);
            const int k = chi_bruteforce(contract_edge(g, e));
            CHECK(k >= c - 1);
            CHECK(k <= c + 1);
        }
    }
}

TEST_CASE("induced subgraphs and structure queries")
{
    const Graph c6 = cycle_graph(6);
    const std::vector<Vertex> vs{0, 1, 2, 3};
    CHECK(induced_subgraph(c6, vs) == path_graph(4));
    CHECK(is_bipartite(c6));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(connected_components(disjoint_union(c6, path_graph(2))).size() == 2);
    CHECK(is_connected(c6));
    CHECK_FALSE(is_connected(empty_graph(2)));
    const std::vector<Vertex> tri{0, 1, 2};
    CHECK(is_clique(complete_graph(4), tri));
    CHECK(is_independent(empty_graph(4), tri));
    CHECK_THROWS_AS(add_edge(c6, {0, 1}), ArgumentError);
    CHECK(add_edge(c6, {0, 3}).edge_count() == 7);
}

TEST_CASE("named families")
{
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(empty_graph(5).edge_count() == 0);
    CHECK(star_graph(3).order() == 4);
    CHECK_THROWS_AS(cycle_graph(2), ArgumentError);
    CHECK_THROWS_AS(make_named(NamedKind::Path, -1), ArgumentError);
    for (int ell = 1; ell <= 6; ++ell)
        CHECK(chi_bruteforce(make_named(NamedKind::Clique, ell + 1)) == ell + 1);
}

TEST_CASE("Grötzsch graph")
{
    const Graph f = grotzsch();
    CHECK(f.order() == 11);
    CHECK(f.edge_count() == 20);
    CHECK_FALSE(oracle::contains_induced(f, cycle_graph(3)));
    CHECK(find_coloring(f, 3) == std::nullopt);
    CHECK(find_coloring(f, 4).has_value());
    CHECK(mycielskian(cycle_graph(5)) == f);
}

TEST_CASE("vertex cap")
{
    const std::size_t old = max_graph_vertices();
    set_max_graph_vertices(8);
    CHECK_THROWS_AS(Graph(9), ResourceError);
    CHECK_THROWS_AS(disjoint_union(cycle_graph(5), cycle_graph(5)), ResourceError);
    set_max_graph_vertices(old);
    CHECK_NOTHROW(Graph(9));
}
