#pragma once

#include "critcol/chromatic.hpp"
#include "critcol/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace critcol {

/// Which element kinds a scan evaluates.
struct ScanOptions {
    bool vertices = true;
    bool edges = true;
    bool contraction = true;
    /// Keep the (chi-1)-coloring that certifies each critical element.
    bool keep_witnesses = false;
    /// Take contraction-critical edges to be the critical edges instead of
    /// contracting each edge. Halves the work; off by default.
    bool assume_prop1 = false;
    /// Worker threads; 0 means hardware concurrency.
    int jobs = 0;
    ChiOptions chi;
};

struct CriticalityReport {
    int chi = 0;
    std::optional<std::vector<Vertex>> critical_vertices;
    std::optional<std::vector<Edge>> critical_edges;
    std::optional<std::vector<Edge>> contraction_critical_edges;

    // Colorings of G-v, G-e and G/e with chi-1 colors (only when requested).
    std::map<Vertex, std::vector<int>> vertex_witnesses;
    std::map<Edge, std::vector<int>> edge_witnesses;
    std::map<Edge, std::vector<int>> contraction_witnesses;
};

/// Full scan. Every element is decided independently; result sets are
/// sorted and do not depend on thread scheduling.
CriticalityReport scan_criticality(const Graph& g, const ScanOptions& opts = {});

/// Vertices v with chi(G-v) = chi(G)-1.
std::vector<Vertex> critical_vertices(const Graph& g, const ScanOptions& opts = {});
/// Edges e with chi(G-e) = chi(G)-1.
std::vector<Edge> critical_edges(const Graph& g, const ScanOptions& opts = {});
/// Edges e with chi(G/e) = chi(G)-1, decided by contracting e.
std::vector<Edge> contraction_critical_edges(const Graph& g, const ScanOptions& opts = {});

// Existence versions; stop at the first critical element.
bool has_critical_vertex(const Graph& g, const ScanOptions& opts = {});
bool has_critical_edge(const Graph& g, const ScanOptions& opts = {});
bool has_contraction_critical_edge(const Graph& g, const ScanOptions& opts = {});

} // namespace critcol
