#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace critcol {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Upper bound on the vertex count of any Graph value (default 4096).
std::size_t max_graph_vertices();
void set_max_graph_vertices(std::size_t cap);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one fixed-width bitset row per vertex. Every operation in
/// this header returns a new value; a Graph is never modified after it is
/// built, so values can be shared freely between threads.
class Graph {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws ArgumentError on loops or out-of-range endpoints. Duplicate
    /// edges collapse.
    static Graph from_edges(int n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});

    int order() const { return n_; }
    bool empty() const { return n_ == 0; }
    int words() const { return words_; }

    bool adjacent(Vertex u, Vertex v) const
    {
        return (row_ptr(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    std::span<const Word> row(Vertex v) const { return {row_ptr(v), static_cast<std::size_t>(words_)}; }

    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::size_t edge_count() const;
    /// All edges, sorted ascending by (u, v).
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Label of v, or its decimal index when the graph carries no labels.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    const Word* row_ptr(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    Word* row_ptr(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void set_edge(Vertex u, Vertex v);
    void clear_edge(Vertex u, Vertex v);

    int n_ = 0;
    int words_ = 0;
    std::vector<Word> bits_;
    std::vector<std::string> labels_;
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    GraphBuilder& set_label(Vertex v, std::string label);
    bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
    int order() const { return g_.order(); }

    Graph build() &&;
    Graph build() const&;

private:
    void check(Vertex v) const;

    Graph g_;
};

// Elementary operations.

/// Induced subgraph on V \ {v}; remaining vertices keep their relative order.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Edge e);
/// Merges e.u and e.v into one vertex placed at index e.u (the smaller);
/// e.v is removed and later vertices shift down by one.
Graph contract_edge(const Graph& g, Edge e);
Graph complement(const Graph& g);
/// Vertices of b are offset by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus every edge between the two blocks.
Graph join(const Graph& a, const Graph& b);
/// Subgraph induced by `vertices`, in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// g plus the edge e (ArgumentError if e is already present).
Graph add_edge(const Graph& g, Edge e);

// Structure queries.

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent(const Graph& g, std::span<const Vertex> vertices);

// Named families.

enum class NamedKind { Path, Cycle, Clique, Empty };

Graph make_named(NamedKind kind, int r);
Graph path_graph(int r);
Graph cycle_graph(int r);
Graph complete_graph(int r);
Graph empty_graph(int r);
Graph star_graph(int leaves);
/// Mycielski construction: keeps triangle-freeness and raises chi by one.
Graph mycielskian(const Graph& g);
/// 11-vertex, 20-edge triangle-free graph with chromatic number 4.
Graph grotzsch();

} // namespace critcol
