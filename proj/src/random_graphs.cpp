#include "critcol/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace critcol {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    // splitmix64 finalizer over the pair
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_graph(int n, double p, Rng& rng)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng))
                b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

namespace {

void cograph_rec(GraphBuilder& b, std::vector<Vertex> vs, Rng& rng)
{
    if (vs.size() <= 1)
        return;
    std::uniform_int_distribution<std::size_t> parts_dist(2, std::min<std::size_t>(vs.size(), 4));
    const std::size_t parts = parts_dist(rng);
    std::shuffle(vs.begin(), vs.end(), rng);
    // random cut points give non-empty blocks
    std::vector<std::size_t> cuts(vs.size() - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(vs.size());

    std::vector<std::vector<Vertex>> blocks;
    std::size_t start = 0;
    for (std::size_t c : cuts) {
        blocks.emplace_back(vs.begin() + start, vs.begin() + c);
        start = c;
    }
    const bool is_join = std::bernoulli_distribution(0.5)(rng);
    if (is_join) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                for (Vertex u : blocks[i]) {
                    for (Vertex v : blocks[j])
                        b.add_edge(u, v);
                }
            }
        }
    }
    for (auto& blk : blocks)
        cograph_rec(b, std::move(blk), rng);
}

} // namespace

Graph random_cograph(int n, Rng& rng)
{
    GraphBuilder b(n);
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    cograph_rec(b, std::move(vs), rng);
    return std::move(b).build();
}

Graph random_triangle_free(int n, double p, Rng& rng)
{
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v)
            candidates.emplace_back(u, v);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (const Edge& e : candidates) {
        if (!coin(rng))
            continue;
        bool closes = false;
        for (Vertex w = 0; w < n && !closes; ++w)
            closes = b.adjacent(e.u, w) && b.adjacent(e.v, w);
        if (!closes)
            b.add_edge(e.u, e.v);
    }
    return std::move(b).build();
}

Graph graph_from_code(int n, std::uint64_t code)
{
    GraphBuilder b(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1U)
                b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

} // namespace critcol
