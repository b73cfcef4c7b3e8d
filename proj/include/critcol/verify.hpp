#pragma once

#include "critcol/reductions.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critcol::verify {

// Machine checks of the finite equivalences behind each hardness and
// tractability result, at desk scale. Every suite is deterministic for a
// fixed seed and writes failing inputs to `out_dir` for replay.

enum class Suite { Prop1, Thm3, Thm4, Claim2, Claim3, MainVertex, MainEdge, PolyColorers };

std::string_view to_string(Suite s);
/// Accepts the CLI spelling ("prop1", "main-vertex", ...).
std::optional<Suite> parse_suite(std::string_view name);

struct Options {
    std::uint64_t seed = 1;
    int jobs = 0;
    /// prop1: vertex count of the exhaustive enumeration.
    int max_n = 6;
    /// thm3/thm4/claim2/main-*: number of random cases.
    int samples = 0; // 0 = suite default
    /// Formula size for claim2/main-vertex/main-edge; 0 picks the suite
    /// default (6, 6 and 3).
    int n = 0;
    /// Non-1-satisfiable fixture formulas (claim3 / main-edge). When empty,
    /// the suite discovers one by seeded search.
    std::vector<Formula> fixtures;
    std::filesystem::path out_dir = "counterexamples";
    /// Vertex cap handed to the exact solver.
    int exact_cap = 128;
};

struct Counterexample {
    std::string description;
    std::filesystem::path file; // empty if persisting failed
};

struct Report {
    std::string suite;
    std::size_t run = 0;
    std::size_t passed = 0;
    std::vector<Counterexample> counterexamples;
    double wall_seconds = 0.0;
    /// Cases skipped because they exceeded a resource cap; not counted in `run`.
    std::vector<std::string> capped;
    /// Suite-specific facts worth printing (counts, timings, sigma values).
    std::vector<std::string> notes;

    bool ok() const { return counterexamples.empty() && passed == run; }
};

Report run(Suite suite, const Options& opts);

Report prop1(const Options& opts);
Report thm3(const Options& opts);
Report thm4(const Options& opts);
Report claim2(const Options& opts);
Report claim3(const Options& opts);
Report main_vertex(const Options& opts);
Report main_edge(const Options& opts);
Report poly_colorers(const Options& opts);

/// First non-1-satisfiable random_formula(n, s) for s = first_seed, first_seed+1, ...
struct Discovered {
    Formula formula;
    std::uint64_t seed = 0;
};
Discovered find_unsat_formula(int n, std::uint64_t first_seed = 1, int max_tries = 10000);

/// Formula used by the n = 3 checks: the only valid shape at that size.
Formula base_formula_n3();

/// Formulas for a formula-driven suite: the unique instance when n == 3,
/// otherwise `samples` seeded random instances.
std::vector<std::pair<Formula, std::uint64_t>> formula_cases(int n, int samples, std::uint64_t seed);

/// Same formula with the variables of one clause rotated.
Formula rotate_clause(const Formula& f, int clause);

} // namespace critcol::verify
