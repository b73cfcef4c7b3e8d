#include "critcol/error.hpp"
#include "critcol/hfree.hpp"
#include "critcol/random_graphs.hpp"
#include "critcol/reductions.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace critcol;

namespace {

// Paths only: acyclic with maximum degree at most two.
bool linear_forest_by_counting(const Graph& h)
{
    for (Vertex v = 0; v < h.order(); ++v) {
        if (h.degree(v) > 2)
            return false;
    }
    return h.edge_count() + connected_components(h).size() == static_cast<std::size_t>(h.order());
}

bool embedding_is_valid(const Graph& g, const Graph& h, const Embedding& e)
{
    if (static_cast<int>(e.size()) != h.order())
        return false;
    for (int a = 0; a < h.order(); ++a) {
        for (int b = a + 1; b < h.order(); ++b) {
            if (e[a] == e[b] || g.adjacent(e[a], e[b]) != h.adjacent(a, b))
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("induced subgraph search, fixed cases")
{
    const Graph p1p3 = named_pattern("P1+P3");
    CHECK(contains_induced(cycle_graph(7), p1p3));
    CHECK_FALSE(contains_induced(cycle_graph(5), p1p3));
    CHECK(contains_induced(cycle_graph(5), Graph{}));
    CHECK(find_induced(cycle_graph(5), Graph{})->empty());
    CHECK_FALSE(contains_induced(cycle_graph(5), path_graph(5)));
    CHECK(contains_induced(cycle_graph(6), path_graph(5)));
    CHECK_FALSE(contains_induced(complete_graph(4), path_graph(3)));
    CHECK_FALSE(contains_induced(path_graph(3), path_graph(4)));

    const auto w = find_induced(cycle_graph(7), p1p3);
    REQUIRE(w.has_value());
    CHECK(embedding_is_valid(cycle_graph(7), p1p3, *w));
}

TEST_CASE("induced subgraph search agrees with exhaustive search")
{
    Rng rng(23);
    const std::vector<Graph> patterns{path_graph(3),         path_graph(4),         cycle_graph(4),
                                      named_pattern("claw"), named_pattern("paw"),  named_pattern("2P2"),
                                      named_pattern("4P1"),  named_pattern("P1+P3"), cycle_graph(5)};
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(3 + i % 6, 0.5, rng);
        for (const Graph& h : patterns) {
            const auto w = find_induced(g, h);
            CHECK(w.has_value() == oracle::contains_induced(g, h));
            if (w)
                CHECK(embedding_is_valid(g, h, *w));
        }
    }
}

TEST_CASE("containment is monotone under vertex deletion")
{
    // if G - v contains H then so does G
    Rng rng(29);
    const Graph h = path_graph(4);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(4 + i % 6, 0.4, rng);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (contains_induced(delete_vertex(g, v), h))
                CHECK(contains_induced(g, h));
        }
    }
}

TEST_CASE("freeness report")
{
    const FreenessReport r = is_h_free(cycle_graph(5), {{"C3", cycle_graph(3)}, {"P4", path_graph(4)}});
    REQUIRE(r.patterns.size() == 2);
    CHECK_FALSE(r.patterns[0].contained);
    CHECK(r.patterns[1].contained);
    CHECK(r.patterns[1].witness.has_value());
    CHECK_FALSE(r.free());
    CHECK(is_h_free(cycle_graph(5), {{"C3", cycle_graph(3)}}).free());
}

TEST_CASE("gadget freeness lists")
{
    const std::vector<NamedPattern> gadget_list{{"C4", cycle_graph(4)},
                                                {"C5", cycle_graph(5)},
                                                {"K4", complete_graph(4)},
                                                {"co-2P1+P2", named_pattern("co-2P1+P2")}};
    const std::vector<NamedPattern> target_list{{"C5", cycle_graph(5)},
                                                {"4P1", named_pattern("4P1")},
                                                {"2P1+P2", named_pattern("2P1+P2")},
                                                {"2P2", named_pattern("2P2")}};
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const GadgetGraph gg = build_vertex_gadget(random_formula(6, seed));
        CHECK(is_h_free(gg.graph, gadget_list).free());
        CHECK(is_h_free(to_target_instance(gg), target_list).free());
    }
}

TEST_CASE("named patterns")
{
    CHECK(named_pattern("P4") == path_graph(4));
    CHECK(named_pattern("C5") == cycle_graph(5));
    CHECK(named_pattern("K4") == complete_graph(4));
    CHECK(named_pattern("4P1") == empty_graph(4));
    CHECK(oracle::isomorphic(named_pattern("2P2"), disjoint_union(path_graph(2), path_graph(2))));
    CHECK(oracle::isomorphic(named_pattern("K13"), star_graph(3)));
    CHECK(oracle::isomorphic(named_pattern("claw"), star_graph(3)));
    CHECK(named_pattern("paw").edge_count() == 4);
    CHECK(oracle::isomorphic(named_pattern("co-P4"), path_graph(4)));
    CHECK_THROWS_AS(named_pattern("Q7"), ArgumentError);
    CHECK_THROWS_AS(named_pattern(""), ArgumentError);
}

TEST_CASE("linear forests")
{
    CHECK(is_linear_forest(named_pattern("2P2")));
    CHECK_FALSE(is_linear_forest(star_graph(3)));
    CHECK_FALSE(is_linear_forest(cycle_graph(3)));
    CHECK(is_linear_forest(empty_graph(3)));
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
            const Graph h = graph_from_code(n, code);
            CHECK(is_linear_forest(h) == linear_forest_by_counting(h));
        }
    }
}

TEST_CASE("classifier, fixed cases")
{
    auto check = [](const char* name, Verdict v, ClassificationRule r) {
        CAPTURE(name);
        const HClassification c = classify_h(named_pattern(name));
        CHECK(c.verdict == v);
        CHECK(c.rule == r);
    };
    check("P4", Verdict::PolyTime, ClassificationRule::SubP4);
    check("3P1", Verdict::PolyTime, ClassificationRule::SubP1P3);
    check("K13", Verdict::NPHard, ClassificationRule::ContainsClawOrCycle);
    check("2P2", Verdict::CoNPHard, ClassificationRule::LinearForestHard);
    CHECK_THROWS_AS(classify_h(Graph{}), ArgumentError);
    CHECK(to_string(Verdict::PolyTime) == "PolyTime");
    CHECK(to_string(ClassificationRule::SubP4) == "SubP4");
}

TEST_CASE("classifier on every graph with at most four vertices")
{
    const Graph p4 = path_graph(4);
    const Graph p1p3 = disjoint_union(empty_graph(1), path_graph(3));
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
            const Graph h = graph_from_code(n, code);
            CAPTURE(n);
            CAPTURE(code);
            const HClassification c = classify_h(h);
            if (oracle::contains_induced(p4, h)) {
                CHECK(c.verdict == Verdict::PolyTime);
                CHECK(c.rule == ClassificationRule::SubP4);
            } else if (oracle::contains_induced(p1p3, h)) {
                CHECK(c.verdict == Verdict::PolyTime);
                CHECK(c.rule == ClassificationRule::SubP1P3);
            } else if (!linear_forest_by_counting(h)) {
                CHECK(c.verdict == Verdict::NPHard);
                CHECK(c.rule == ClassificationRule::ContainsClawOrCycle);
            } else {
                CHECK(c.verdict == Verdict::CoNPHard);
                CHECK(c.rule == ClassificationRule::LinearForestHard);
            }
        }
    }
}

TEST_CASE("every hard linear forest up to six vertices contains a hard-class obstruction")
{
    // The co-NP-hard instances are (C5, 4P1, 2P1+P2, 2P2)-free, so a linear
    // forest H labelled LinearForestHard must contain one of the last three.
    const std::vector<Graph> witnesses{empty_graph(4), disjoint_union(empty_graph(2), path_graph(2)),
                                       disjoint_union(path_graph(2), path_graph(2))};
    int hard = 0;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
            const Graph h = graph_from_code(n, code);
            if (!linear_forest_by_counting(h))
                continue;
            const HClassification c = classify_h(h);
            if (c.verdict != Verdict::CoNPHard)
                continue;
            ++hard;
            CAPTURE(code);
            CHECK(std::any_of(witnesses.begin(), witnesses.end(),
                              [&](const Graph& w) { return oracle::contains_induced(h, w); }));
        }
    }
    CHECK(hard > 0);
}
