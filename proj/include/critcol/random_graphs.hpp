#pragma once

#include "critcol/graph.hpp"

#include <cstdint>
#include <random>

namespace critcol {

using Rng = std::mt19937_64;

/// Derives an independent seed for case `index` of a run seeded with `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// Graph with n vertices built from a random cotree (random splits, each
/// internal node randomly a union or a join).
Graph random_cograph(int n, Rng& rng);

/// Random triangle-free graph: candidate edges in random order, each kept
/// with probability p unless it would close a triangle.
Graph random_triangle_free(int n, double p, Rng& rng);

/// Labeled graph on n vertices whose edge set is the bit pattern `code`
/// over the pairs (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_code(int n, std::uint64_t code);

} // namespace critcol
