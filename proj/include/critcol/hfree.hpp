#pragma once

#include "critcol/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critcol {

/// Injective map from pattern vertices to host vertices that preserves both
/// adjacency and non-adjacency. embedding[i] is the image of pattern vertex i.
using Embedding = std::vector<Vertex>;

/// Backtracking induced-subgraph search with degree pruning. Returns a
/// witness embedding of h into g, or nullopt when g is h-free. The empty
/// pattern always embeds.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);
bool contains_induced(const Graph& g, const Graph& h);

struct NamedPattern {
    std::string name;
    Graph graph;
};

struct PatternResult {
    std::string name;
    bool contained = false;
    std::optional<Embedding> witness;
};

struct FreenessReport {
    std::vector<PatternResult> patterns;

    /// True iff no pattern occurs as an induced subgraph.
    bool free() const;
};

FreenessReport is_h_free(const Graph& g, const std::vector<NamedPattern>& patterns);

/// Every component is a path.
bool is_linear_forest(const Graph& h);

/// Small-graph names understood by the CLI and tests:
///   Pr, Cr, Kr, rP1-style multiples joined with '+' (e.g. "2P1+P2", "P1+P3",
///   "4P1"), "K13"/"claw", "paw", and "co-<name>" for complements.
/// Throws ArgumentError on an unknown name.
Graph named_pattern(std::string_view name);

enum class Verdict { PolyTime, NPHard, CoNPHard };

enum class ClassificationRule {
    SubP4,               ///< H is an induced subgraph of P4
    SubP1P3,             ///< H is an induced subgraph of P1+P3
    ContainsClawOrCycle, ///< H has a cycle or an induced claw
    LinearForestHard,    ///< linear forest outside the two easy classes
};

struct HClassification {
    Verdict verdict = Verdict::PolyTime;
    ClassificationRule rule = ClassificationRule::SubP4;
};

/// Complexity of Critical Vertex / Critical Edge / Contraction-Critical Edge
/// on H-free graphs. Throws ArgumentError when h has no vertices.
HClassification classify_h(const Graph& h);

std::string_view to_string(Verdict v);
std::string_view to_string(ClassificationRule r);

} // namespace critcol
