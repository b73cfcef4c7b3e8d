#include "critcol/criticality.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace critcol {

namespace {

enum class Kind { Vertex, Deletion, Contraction };

Graph reduce(const Graph& g, Kind kind, Vertex v, Edge e)
{
    switch (kind) {
    case Kind::Vertex:
        return delete_vertex(g, v);
    case Kind::Deletion:
        return delete_edge(g, e);
    case Kind::Contraction:
        return contract_edge(g, e);
    }
    return g;
}

// Decides every element of one kind. `hits` receives the indices (into the
// vertex or edge list) of critical elements, sorted.
struct KindScan {
    std::vector<std::size_t> hits;
    std::map<std::size_t, std::vector<int>> witnesses;
};

KindScan scan_kind(const Graph& g, int chi0, Kind kind, const std::vector<Edge>& edges, const ScanOptions& opts,
                   bool stop_at_first)
{
    KindScan out;
    if (chi0 == 0)
        return out;
    const std::size_t count = kind == Kind::Vertex ? static_cast<std::size_t>(g.order()) : edges.size();
    std::mutex mu;
    detail::parallel_for(count, opts.jobs, [&](std::size_t i) {
        const Graph reduced = kind == Kind::Vertex ? reduce(g, kind, static_cast<Vertex>(i), {})
                                                   : reduce(g, kind, -1, edges[i]);
        auto coloring = colorable_with(reduced, chi0 - 1, opts.chi);
        if (!coloring)
            return false;
        std::lock_guard lock(mu);
        out.hits.push_back(i);
        if (opts.keep_witnesses)
            out.witnesses.emplace(i, std::move(*coloring));
        return stop_at_first;
    });
    std::sort(out.hits.begin(), out.hits.end());
    return out;
}

} // namespace

CriticalityReport scan_criticality(const Graph& g, const ScanOptions& opts)
{
    CriticalityReport r;
    r.chi = chi(g, opts.chi).chi;
    const std::vector<Edge> edges = g.edges();

    if (opts.vertices) {
        KindScan s = scan_kind(g, r.chi, Kind::Vertex, edges, opts, false);
        r.critical_vertices.emplace();
        for (std::size_t i : s.hits)
            r.critical_vertices->push_back(static_cast<Vertex>(i));
        for (auto& [i, w] : s.witnesses)
            r.vertex_witnesses.emplace(static_cast<Vertex>(i), std::move(w));
    }
    if (opts.edges || (opts.contraction && opts.assume_prop1)) {
        KindScan s = scan_kind(g, r.chi, Kind::Deletion, edges, opts, false);
        r.critical_edges.emplace();
        for (std::size_t i : s.hits)
            r.critical_edges->push_back(edges[i]);
        for (auto& [i, w] : s.witnesses)
            r.edge_witnesses.emplace(edges[i], std::move(w));
    }
    if (opts.contraction) {
        if (opts.assume_prop1) {
            r.contraction_critical_edges = r.critical_edges;
        } else {
            KindScan s = scan_kind(g, r.chi, Kind::Contraction, edges, opts, false);
            r.contraction_critical_edges.emplace();
            for (std::size_t i : s.hits)
                r.contraction_critical_edges->push_back(edges[i]);
            for (auto& [i, w] : s.witnesses)
                r.contraction_witnesses.emplace(edges[i], std::move(w));
        }
        if (!opts.edges && opts.assume_prop1)
            r.critical_edges.reset();
    }
    return r;
}

std::vector<Vertex> critical_vertices(const Graph& g, const ScanOptions& opts)
{
    ScanOptions o = opts;
    o.vertices = true;
    o.edges = o.contraction = false;
    return *scan_criticality(g, o).critical_vertices;
}

std::vector<Edge> critical_edges(const Graph& g, const ScanOptions& opts)
{
    ScanOptions o = opts;
    o.edges = true;
    o.vertices = o.contraction = false;
    return *scan_criticality(g, o).critical_edges;
}

std::vector<Edge> contraction_critical_edges(const Graph& g, const ScanOptions& opts)
{
    ScanOptions o = opts;
    o.contraction = true;
    o.vertices = o.edges = false;
    o.assume_prop1 = false;
    return *scan_criticality(g, o).contraction_critical_edges;
}

namespace {

bool has_kind(const Graph& g, Kind kind, const ScanOptions& opts)
{
    const int chi0 = chi(g, opts.chi).chi;
    ScanOptions o = opts;
    o.keep_witnesses = false;
    return !scan_kind(g, chi0, kind, g.edges(), o, true).hits.empty();
}

} // namespace

bool has_critical_vertex(const Graph& g, const ScanOptions& opts) { return has_kind(g, Kind::Vertex, opts); }
bool has_critical_edge(const Graph& g, const ScanOptions& opts) { return has_kind(g, Kind::Deletion, opts); }
bool has_contraction_critical_edge(const Graph& g, const ScanOptions& opts)
{
    return has_kind(g, opts.assume_prop1 ? Kind::Deletion : Kind::Contraction, opts);
}

} // namespace critcol
