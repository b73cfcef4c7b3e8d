#pragma once

// Slow reference implementations for cross-checks. None of these call the
// library's search code; they only use Graph construction and chi_bruteforce.

#include "critcol/chromatic.hpp"
#include "critcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using critcol::Edge;
using critcol::Graph;
using critcol::Vertex;

// Does h occur as an induced subgraph of g? Tries every injective map.
inline bool contains_induced(const Graph& g, const Graph& h)
{
    const int k = h.order();
    const int n = g.order();
    if (k > n)
        return false;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        std::vector<Vertex> sub;
        for (int i = 0; i < n; ++i) {
            if (pick[i])
                sub.push_back(i);
        }
        do {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a) {
                for (int b = a + 1; b < k && ok; ++b)
                    ok = g.adjacent(sub[a], sub[b]) == h.adjacent(a, b);
            }
            if (ok)
                return true;
        } while (std::next_permutation(sub.begin(), sub.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

inline std::vector<Vertex> critical_vertices(const Graph& g)
{
    const int chi = critcol::chi_bruteforce(g);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (critcol::chi_bruteforce(critcol::delete_vertex(g, v)) == chi - 1)
            out.push_back(v);
    }
    return out;
}

inline std::vector<Edge> critical_edges(const Graph& g)
{
    const int chi = critcol::chi_bruteforce(g);
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (critcol::chi_bruteforce(critcol::delete_edge(g, e)) == chi - 1)
            out.push_back(e);
    }
    return out;
}

inline std::vector<Edge> contraction_critical_edges(const Graph& g)
{
    const int chi = critcol::chi_bruteforce(g);
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (critcol::chi_bruteforce(critcol::contract_edge(g, e)) == chi - 1)
            out.push_back(e);
    }
    return out;
}

// Graph isomorphism by trying every vertex permutation (tiny graphs only).
inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (Vertex u = 0; u < a.order() && ok; ++u) {
            for (Vertex v = u + 1; v < a.order() && ok; ++v)
                ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
        }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

} // namespace oracle
