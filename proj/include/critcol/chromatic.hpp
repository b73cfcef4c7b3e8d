#pragma once

#include "critcol/graph.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace critcol {

enum class ColoringMethod { Exact, Cotree, P1P3Structural, BruteForce };

std::string_view to_string(ColoringMethod m);

/// Chromatic number with a certificate. coloring[v] is in 1..chi.
/// The empty graph has chi = 0.
struct ColoringResult {
    int chi = 0;
    std::vector<int> coloring;
    ColoringMethod method = ColoringMethod::Exact;
};

/// True iff `coloring` is proper and uses exactly the colors 1..chi.
bool is_valid_coloring(const Graph& g, const std::vector<int>& coloring, int chi);

struct ExactOptions {
    /// Largest vertex count chi_exact accepts before raising ResourceError.
    int max_vertices = 64;
};

/// Exact chromatic number by DSATUR branch and bound.
///
/// Colors a maximum clique first, then branches on the uncolored vertex of
/// highest saturation (ties: higher degree, then lower index). A node is
/// pruned when the colors in use plus a greedy clique among vertices that
/// fit no existing class reaches the incumbent. Deterministic.
ColoringResult chi_exact(const Graph& g, const ExactOptions& opts = {});

/// Proper coloring with at most k colors, or nullopt if none exists.
/// Same search as chi_exact with the incumbent fixed at k + 1.
std::optional<std::vector<int>> find_coloring(const Graph& g, int k, const ExactOptions& opts = {});

/// Size of a maximum clique and one witness (exact, bitset branch and bound).
std::vector<Vertex> maximum_clique(const Graph& g);

/// Naive oracle: for k = 1, 2, ... tries every assignment of at most k
/// colors (up to renaming colors) against the full edge list.
/// Shares no code with chi_exact. Throws ResourceError for n > 10.
int chi_bruteforce(const Graph& g);

/// Partition of V(g) into cliques.
struct CliqueCover {
    std::vector<std::vector<Vertex>> cliques;

    int size() const { return static_cast<int>(cliques.size()); }
};

bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover);

/// Minimum clique cover, computed as an optimal coloring of the complement.
CliqueCover clique_cover_number(const Graph& g, const ExactOptions& opts = {});

/// Union/join decomposition tree of a P4-free graph.
struct Cotree {
    enum class Kind { Leaf, Union, Join };

    struct Node {
        Kind kind = Kind::Leaf;
        Vertex vertex = -1; // leaves only
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    int root = -1;
    int vertex_count = 0;
};

/// Cotree of g, or nullopt iff g contains an induced P4.
std::optional<Cotree> recognize_cograph(const Graph& g);

/// Rebuilds the graph a cotree describes.
Graph evaluate(const Cotree& t);

/// chi(Union) = max, chi(Join) = sum; colors are offset at join nodes.
ColoringResult chi_cotree(const Cotree& t);

/// Number of (P1+P3)-free components so far that needed the exact fallback.
std::size_t p1p3_fallback_count();
void reset_p1p3_fallback_count();

/// Polynomial coloring of a (P1+P3)-free graph.
///
/// The complement of such a graph is paw-free, so each co-component of a
/// component is either a disjoint union of cliques (chi = largest clique) or
/// has a triangle-free complement (chi = size minus a maximum matching of the
/// complement). Co-components are joined, so their chromatic numbers add.
/// Throws ArgumentError if g contains an induced P1+P3.
ColoringResult chi_p1p3_free(const Graph& g);

struct ChiOptions {
    ExactOptions exact;
    bool allow_polynomial = true;
};

/// Dispatcher: cotree route, then the (P1+P3)-free route, else chi_exact.
ColoringResult chi(const Graph& g, const ChiOptions& opts = {});

/// Does g admit a proper coloring with at most k colors? Uses the same
/// routing as chi(); on success the coloring is returned.
std::optional<std::vector<int>> colorable_with(const Graph& g, int k, const ChiOptions& opts = {});

} // namespace critcol
