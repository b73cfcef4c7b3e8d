#include "critcol/chromatic.hpp"
#include "critcol/error.hpp"
#include "critcol/hfree.hpp"
#include "critcol/reductions.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace critcol;

namespace {

const char* kN3 = "p m1in3 3\nc 1 2 3\nc 1 2 3\nc 1 2 3\n";

// Independent 1-in-3 check: enumerate assignments with plain loops.
bool satisfiable_by_loops(const Formula& f)
{
    for (std::uint32_t mask = 0; mask < (1U << f.n); ++mask) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            int t = 0;
            for (int x : c)
                t += (mask >> x) & 1U;
            if (t != 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

bool has_violation(std::string_view text, std::string_view needle)
{
    try {
        parse_formula(text);
    } catch (const FormulaError& e) {
        return std::ranges::any_of(e.violations(), [&](const FormulaViolation& v) {
            return v.message.find(needle) != std::string::npos;
        });
    }
    return false;
}

} // namespace

TEST_CASE("formula parsing")
{
    const Formula f = parse_formula(std::string("# comment\n") + kN3);
    CHECK(f.n == 3);
    CHECK(f.clauses.size() == 3);
    CHECK(validate(f).empty());
    CHECK(parse_formula(to_string(f, "round trip")) == f);

    CHECK_THROWS_AS(parse_formula("p m1in3 3\nc 1 1 2\nc 1 2 3\nc 2 3 3\n"), FormulaError);
    CHECK(has_violation("p m1in3 3\nc 1 1 2\nc 1 2 3\nc 2 3 3\n", "repeat"));
    CHECK(has_violation("p m1in3 4\nc 1 2 3\nc 1 2 4\nc 1 3 4\nc 1 2 4\n", "variable 1"));
    CHECK_THROWS_AS(parse_formula("c 1 2 3\n"), FormulaError);
    CHECK_THROWS_AS(parse_formula("p m1in3 3\nc 1 2 3\nc 1 2 3\n"), FormulaError);
    CHECK_THROWS_AS(parse_formula("p m1in3 3\nc 1 2 4\nc 1 2 3\nc 1 2 3\n"), FormulaError);
    CHECK_THROWS_AS(parse_formula("p m1in3 3\nc 1 2\nc 1 2 3\nc 1 2 3\n"), FormulaError);
}

TEST_CASE("variable occurring four times is rejected")
{
    Formula f;
    f.n = 4;
    f.clauses = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {0, 1, 2}};
    CHECK_FALSE(validate(f).empty());
}

TEST_CASE("1-in-3 oracle")
{
    const Formula f = parse_formula(kN3);
    const auto a = oracle_1in3(f);
    REQUIRE(a.has_value());
    CHECK(is_one_in_three(f, *a));
    CHECK(std::count(a->begin(), a->end(), true) == 1);

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        for (int n : {4, 5, 6, 8}) {
            const Formula g = random_formula(n, seed);
            const auto b = oracle_1in3(g);
            CHECK(b.has_value() == satisfiable_by_loops(g));
            if (b)
                CHECK(is_one_in_three(g, *b));
        }
    }
    Formula big;
    big.n = 25;
    CHECK_THROWS_AS(oracle_1in3(big), ResourceError);
}

TEST_CASE("random formulas are valid and reproducible")
{
    // n = 3 has one valid shape: every clause holds all three variables
    for (std::uint64_t seed : {1ULL, 99ULL}) {
        for (auto c : random_formula(3, seed).clauses) {
            std::ranges::sort(c);
            CHECK(c == std::array<int, 3>{0, 1, 2});
        }
    }
    for (int n = 3; n <= 30; ++n) {
        for (std::uint64_t seed : {1ULL, 2ULL, 1234567ULL}) {
            const Formula f = random_formula(n, seed);
            CHECK(validate(f).empty());
            std::vector<int> occ(n, 0);
            for (const auto& c : f.clauses) {
                for (int x : c)
                    ++occ[x];
            }
            CHECK(std::ranges::all_of(occ, [](int k) { return k == 3; }));
            CHECK(random_formula(n, seed) == f);
        }
    }
    CHECK_THROWS_AS(random_formula(2, 1), ArgumentError);
}

TEST_CASE("stored unsatisfiable fixture")
{
    const Formula f = read_formula_file(CRITCOL_TEST_DATA_DIR "/unsat_n6.m1in3");
    CHECK(f == random_formula(6, 8));
    CHECK_FALSE(oracle_1in3(f).has_value());
    CHECK_FALSE(satisfiable_by_loops(f));
}

TEST_CASE("vertex gadget structure")
{
    const GadgetGraph gg = build_vertex_gadget(parse_formula(kN3));
    CHECK(gg.graph.order() == 21);
    CHECK(gg.graph.edge_count() == 30);
    CHECK(maximum_clique(gg.graph).size() == 3);
    for (int c = 0; c < 3; ++c) {
        const auto cyc = gg.clause_cycle(c);
        CHECK(cyc.size() == 7);
        CHECK(oracle::isomorphic(induced_subgraph(gg.graph, cyc), cycle_graph(7)));
        CHECK(cyc[0] == gg.clause_vertex(c, 0));
        CHECK(cyc[3] == gg.clause_vertex(c, 1));
        CHECK(cyc[5] == gg.clause_vertex(c, 2));
    }
    CHECK(gg.graph.label(0) == "c1(x1)");
    CHECK(gg.graph.label(1) == "a1^c1");
    // the three occurrences of a variable form a triangle
    for (int x = 0; x < 3; ++x) {
        std::vector<Vertex> occ;
        for (Vertex v = 0; v < gg.graph.order(); ++v) {
            if (gg.roles[v].kind == VertexRole::Kind::ClauseVar && gg.roles[v].variable == x)
                occ.push_back(v);
        }
        CHECK(occ.size() == 3);
        CHECK(is_clique(gg.graph, occ));
    }
}

TEST_CASE("edge gadget structure")
{
    const GadgetGraph gg = build_edge_gadget(parse_formula(kN3));
    CHECK(gg.graph.order() == 33);
    CHECK(gg.graph.edge_count() == 42);
    CHECK(cycle_length(GadgetVariant::EdgeC11) == 11);
    for (int c = 0; c < 3; ++c)
        CHECK(oracle::isomorphic(induced_subgraph(gg.graph, gg.clause_cycle(c)), cycle_graph(11)) == true);
    CHECK(maximum_clique(gg.graph).size() == 3);
}

TEST_CASE("clique-proof and Grötzsch builders")
{
    const Graph g = build_clique_proof_instance(cycle_graph(5), 3);
    CHECK(g.order() == 14);
    CHECK(g.edge_count() == 10 + 6);
    CHECK(g.label(0).rfind("A:", 0) == 0);
    CHECK(g.label(13).rfind("K:", 0) == 0);
    CHECK_THROWS_AS(build_clique_proof_instance(cycle_graph(5), 0), ArgumentError);

    const Graph h = build_grotzsch_instance(cycle_graph(5));
    CHECK(h.order() == 21);
    CHECK(h.edge_count() == 30);
    CHECK_THROWS_AS(build_grotzsch_instance(complete_graph(3)), ArgumentError);
}

TEST_CASE("clique cover enumeration")
{
    // C4: exactly the two perfect matchings
    std::size_t covers = enumerate_clique_covers(cycle_graph(4), 2, [](const auto&) { return true; });
    CHECK(covers == 2);
    CHECK(min_clique_cover_size_by_enumeration(cycle_graph(5)) == 3);
    CHECK(min_clique_cover_size_by_enumeration(empty_graph(4)) == 4);
    CHECK_THROWS_AS(min_clique_cover_size_by_enumeration(empty_graph(30)), ResourceError);

    // n = 3 gadget: every minimum cover uses cliques of size 2 and 3 only
    const Graph gadget = build_vertex_gadget(parse_formula(kN3)).graph;
    std::size_t seen = 0;
    enumerate_clique_covers(gadget, 10, [&](const std::vector<std::vector<Vertex>>& cover) {
        ++seen;
        for (const auto& k : cover) {
            CHECK(k.size() >= 2);
            CHECK(k.size() <= 3);
            CHECK(is_clique(gadget, k));
        }
        return true;
    });
    CHECK(seen > 0);
    CHECK(enumerate_clique_covers(gadget, 9, [](const auto&) { return true; }) == 0);
}
