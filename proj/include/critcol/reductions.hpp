#pragma once

#include "critcol/graph.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace critcol {

// ------------------------------------------------------------------ formulas

/// Monotone 1-in-3-SAT instance: n variables, n clauses of three distinct
/// variables, every variable in exactly three clauses. Variables are
/// 0-indexed in memory and 1-indexed in files.
struct Formula {
    int n = 0;
    std::vector<std::array<int, 3>> clauses;

    friend bool operator==(const Formula&, const Formula&) = default;
};

struct FormulaViolation {
    int line = 0; // 0 when not tied to a line
    std::string message;
};

/// Thrown by parse_formula; carries every violation found.
class FormulaError : public std::runtime_error {
public:
    explicit FormulaError(std::vector<FormulaViolation> violations);
    const std::vector<FormulaViolation>& violations() const { return violations_; }

private:
    std::vector<FormulaViolation> violations_;
};

/// Invariant violations of f (empty when valid).
std::vector<FormulaViolation> validate(const Formula& f);

/// Format: `p m1in3 <n>`, then n lines `c <v1> <v2> <v3>`; `#` starts a comment line.
Formula parse_formula(std::string_view text);
Formula read_formula_file(const std::filesystem::path& path);
std::string to_string(const Formula& f, std::string_view comment = {});
void write_formula_file(const std::filesystem::path& path, const Formula& f, std::string_view comment = {});

/// Truth assignment with exactly one true variable per clause, or nullopt.
/// Exhaustive over 2^n; ResourceError for n > 24.
std::optional<std::vector<bool>> oracle_1in3(const Formula& f);
bool is_one_in_three(const Formula& f, const std::vector<bool>& assignment);

/// Random valid formula: variable/clause configuration model with repair
/// swaps for clauses that repeat a variable. Deterministic per seed.
/// Throws GenerationError if the swap budget runs out.
Formula random_formula(int n, std::uint64_t seed);

// ------------------------------------------------------ clique-proof / Grötzsch

/// 2g + K_{ell+1}. Labels mark the block: "A:v", "B:v", "K:i".
Graph build_clique_proof_instance(const Graph& g, int ell);

/// 2g + Grötzsch graph. Throws ArgumentError (with the triangle) if g has one.
Graph build_grotzsch_instance(const Graph& g);

// ------------------------------------------------------------ SAT gadgets

enum class GadgetVariant { VertexC7, EdgeC11 };

struct VertexRole {
    enum class Kind { ClauseVar, Filler };
    Kind kind = Kind::Filler;
    int clause = 0;
    int variable = -1; // ClauseVar only
    int filler = 0;    // 1-based a_i index, Filler only
};

struct GadgetGraph {
    Graph graph;
    std::vector<VertexRole> roles;
    GadgetVariant variant = GadgetVariant::VertexC7;
    Formula formula;

    /// Vertex c(x) of clause `clause` for its variable in position `slot`.
    Vertex clause_vertex(int clause, int slot) const;
    /// Vertices of the clause cycle in cyclic order.
    std::vector<Vertex> clause_cycle(int clause) const;
};

int cycle_length(GadgetVariant v);

/// One induced cycle per clause, c(x) a1 a2 c(y) a3 c(z) a4 (C7) or
/// c(x) a1 a2 c(y) a3 a4 a5 c(z) a6 a7 a8 (C11), plus a triangle per
/// variable on its three clause vertices. Clause c occupies the vertex block
/// [c*L, (c+1)*L) in cycle order.
GadgetGraph build_vertex_gadget(const Formula& f);
GadgetGraph build_edge_gadget(const Formula& f);
GadgetGraph build_gadget(const Formula& f, GadgetVariant variant);

/// Complement of the gadget: the instance in the (C5,4P1,2P1+P2,2P2)-free class.
Graph to_target_instance(const GadgetGraph& gg);

// ----------------------------------------------------- clique-cover enumeration

struct CoverEnumOptions {
    int max_vertices = 24;
};

/// Enumerates every clique cover of g with exactly `size` cliques, each once
/// (cliques are listed in order of their lowest vertex). The callback returns
/// false to stop. Returns the number of covers visited. Independent of the
/// coloring solvers.
std::size_t enumerate_clique_covers(const Graph& g, int size,
                                    const std::function<bool(const std::vector<std::vector<Vertex>>&)>& visit,
                                    const CoverEnumOptions& opts = {});

/// Smallest s such that a clique cover of size s exists (by the same
/// enumeration, trying s upward from a lower bound).
int min_clique_cover_size_by_enumeration(const Graph& g, const CoverEnumOptions& opts = {});

} // namespace critcol
