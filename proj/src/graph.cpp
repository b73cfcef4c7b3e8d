#include "critcol/graph.hpp"

#include "critcol/error.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <queue>

namespace critcol {

namespace {

std::atomic<std::size_t> g_max_vertices{4096};

int words_for(int n) { return (n + Graph::kWordBits - 1) / Graph::kWordBits; }

void check_vertex(const Graph& g, Vertex v, const char* what)
{
    if (v < 0 || v >= g.order())
        throw ArgumentError(std::string(what) + ": vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(g.order()) + ")");
}

void check_edge(const Graph& g, Edge e, const char* what)
{
    check_vertex(g, e.u, what);
    check_vertex(g, e.v, what);
    if (e.u == e.v || !g.adjacent(e.u, e.v))
        throw ArgumentError(std::string(what) + ": {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not an edge");
}

} // namespace

std::size_t max_graph_vertices() { return g_max_vertices.load(); }
void set_max_graph_vertices(std::size_t cap) { g_max_vertices.store(cap); }

Graph::Graph(int n)
{
    if (n < 0)
        throw ArgumentError("negative vertex count");
    if (static_cast<std::size_t>(n) > max_graph_vertices())
        throw ResourceError("graph with " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(max_graph_vertices()));
    n_ = n;
    words_ = words_for(n);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels)
{
    GraphBuilder b(n);
    for (const Edge& e : edges)
        b.add_edge(e.u, e.v);
    Graph g = std::move(b).build();
    if (!labels.empty())
        return g.with_labels(std::move(labels));
    return g;
}

void Graph::set_edge(Vertex u, Vertex v)
{
    row_ptr(u)[v / kWordBits] |= Word{1} << (v % kWordBits);
    row_ptr(v)[u / kWordBits] |= Word{1} << (u % kWordBits);
}

void Graph::clear_edge(Vertex u, Vertex v)
{
    row_ptr(u)[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    row_ptr(v)[u / kWordBits] &= ~(Word{1} << (u % kWordBits));
}

int Graph::degree(Vertex v) const
{
    int d = 0;
    for (Word w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    auto r = row(v);
    for (int i = 0; i < words_; ++i) {
        for (Word w = r[i]; w != 0; w &= w - 1)
            out.push_back(i * kWordBits + std::countr_zero(w));
    }
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (Word w : bits_)
        twice += std::popcount(w);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v)
                out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::label(Vertex v) const
{
    if (labels_.empty())
        return std::to_string(v);
    return labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
        throw ArgumentError("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::check(Vertex v) const { check_vertex(g_, v, "GraphBuilder"); }

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u == v)
        throw ArgumentError("loop at vertex " + std::to_string(u));
    g_.set_edge(u, v);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u != v)
        g_.clear_edge(u, v);
    return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label)
{
    check(v);
    if (g_.labels_.empty())
        g_.labels_.resize(g_.order());
    g_.labels_[v] = std::move(label);
    return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    const int k = static_cast<int>(vertices.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        check_vertex(g, vertices[i], "induced_subgraph");
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(vertices[i], vertices[j]))
                b.add_edge(i, j);
        }
        if (g.has_labels())
            b.set_label(i, g.label(vertices[i]));
    }
    return std::move(b).build();
}

Graph delete_vertex(const Graph& g, Vertex v)
{
    check_vertex(g, v, "delete_vertex");
    std::vector<Vertex> keep;
    keep.reserve(g.order() - 1);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v)
            keep.push_back(u);
    }
    return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, Edge e)
{
    check_edge(g, e, "delete_edge");
    GraphBuilder b(g.order());
    for (const Edge& f : g.edges()) {
        if (f != e)
            b.add_edge(f.u, f.v);
    }
    Graph out = std::move(b).build();
    return g.has_labels() ? out.with_labels(g.labels()) : out;
}

Graph contract_edge(const Graph& g, Edge e)
{
    check_edge(g, e, "contract_edge");
    const int n = g.order();
    // old index -> new index; e.v folds into e.u
    std::vector<Vertex> to(n);
    for (Vertex x = 0, next = 0; x < n; ++x) {
        if (x == e.v)
            continue;
        to[x] = next++;
    }
    to[e.v] = to[e.u];

    GraphBuilder b(n - 1);
    for (const Edge& f : g.edges()) {
        const Vertex a = to[f.u];
        const Vertex c = to[f.v];
        if (a != c)
            b.add_edge(a, c);
    }
    if (g.has_labels()) {
        for (Vertex x = 0; x < n; ++x) {
            if (x != e.v)
                b.set_label(to[x], g.label(x));
        }
        b.set_label(to[e.u], g.label(e.u) + g.label(e.v));
    }
    return std::move(b).build();
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
        }
    }
    Graph out = std::move(b).build();
    return g.has_labels() ? out.with_labels(g.labels()) : out;
}

namespace {

Graph union_impl(const Graph& a, const Graph& b, bool cross)
{
    const int na = a.order();
    GraphBuilder out(na + b.order());
    for (const Edge& e : a.edges())
        out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges())
        out.add_edge(e.u + na, e.v + na);
    if (cross) {
        for (Vertex u = 0; u < na; ++u) {
            for (Vertex v = 0; v < b.order(); ++v)
                out.add_edge(u, v + na);
        }
    }
    if (a.has_labels() || b.has_labels()) {
        for (Vertex v = 0; v < na; ++v)
            out.set_label(v, a.label(v));
        for (Vertex v = 0; v < b.order(); ++v)
            out.set_label(v + na, b.label(v));
    }
    return std::move(out).build();
}

} // namespace

Graph disjoint_union(const Graph& a, const Graph& b) { return union_impl(a, b, false); }
Graph join(const Graph& a, const Graph& b) { return union_impl(a, b, true); }

Graph add_edge(const Graph& g, Edge e)
{
    check_vertex(g, e.u, "add_edge");
    check_vertex(g, e.v, "add_edge");
    if (e.u == e.v || g.adjacent(e.u, e.v))
        throw ArgumentError("add_edge: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is a loop or already an edge");
    GraphBuilder b(g.order());
    for (const Edge& f : g.edges())
        b.add_edge(f.u, f.v);
    b.add_edge(e.u, e.v);
    Graph out = std::move(b).build();
    return g.has_labels() ? out.with_labels(g.labels()) : out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : g.neighbors(comp[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g)
{
    const int n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    q.push(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
        }
    }
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j]))
                return false;
        }
    }
    return true;
}

Graph make_named(NamedKind kind, int r)
{
    if (r < 1)
        throw ArgumentError("named graph needs r >= 1");
    switch (kind) {
    case NamedKind::Path:
        return path_graph(r);
    case NamedKind::Cycle:
        return cycle_graph(r);
    case NamedKind::Clique:
        return complete_graph(r);
    case NamedKind::Empty:
        return empty_graph(r);
    }
    throw ArgumentError("unknown named graph kind");
}

Graph path_graph(int r)
{
    if (r < 1)
        throw ArgumentError("path needs r >= 1");
    GraphBuilder b(r);
    for (Vertex v = 0; v + 1 < r; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph cycle_graph(int r)
{
    if (r < 3)
        throw ArgumentError("cycle needs r >= 3, got " + std::to_string(r));
    GraphBuilder b(r);
    for (Vertex v = 0; v < r; ++v)
        b.add_edge(v, (v + 1) % r);
    return std::move(b).build();
}

Graph complete_graph(int r)
{
    if (r < 0)
        throw ArgumentError("clique needs r >= 0");
    GraphBuilder b(r);
    for (Vertex u = 0; u < r; ++u) {
        for (Vertex v = u + 1; v < r; ++v)
            b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph empty_graph(int r) { return Graph(r); }

Graph star_graph(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        b.add_edge(0, v);
    return std::move(b).build();
}

Graph mycielskian(const Graph& g)
{
    // vertices: originals 0..n-1, shadows n..2n-1, apex 2n
    const int n = g.order();
    GraphBuilder b(2 * n + 1);
    for (const Edge& e : g.edges()) {
        b.add_edge(e.u, e.v);
        b.add_edge(e.u, e.v + n);
        b.add_edge(e.v, e.u + n);
    }
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v + n, 2 * n);
    return std::move(b).build();
}

namespace {

bool has_triangle(const Graph& g)
{
    for (const Edge& e : g.edges()) {
        auto ru = g.row(e.u);
        auto rv = g.row(e.v);
        for (int i = 0; i < g.words(); ++i) {
            if (ru[i] & rv[i])
                return true;
        }
    }
    return false;
}

// Plain backtracking, used once to self-check the Grötzsch construction.
bool three_colorable(const Graph& g)
{
    std::vector<int> color(g.order(), -1);
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == g.order())
            return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v)) {
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            color[v] = c;
            if (self(self, v + 1))
                return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

Graph grotzsch()
{
    static const Graph cached = [] {
        Graph g = mycielskian(cycle_graph(5));
        if (g.order() != 11 || g.edge_count() != 20 || has_triangle(g) || three_colorable(g))
            throw Error("Grötzsch construction failed its self-check");
        return g;
    }();
    return cached;
}

} // namespace critcol
