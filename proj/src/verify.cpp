#include "critcol/verify.hpp"

#include "critcol/chromatic.hpp"
#include "critcol/criticality.hpp"
#include "critcol/dimacs.hpp"
#include "critcol/error.hpp"
#include "critcol/hfree.hpp"
#include "critcol/random_graphs.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>

namespace critcol::verify {

std::string_view to_string(Suite s)
{
    switch (s) {
    case Suite::Prop1:
        return "prop1";
    case Suite::Thm3:
        return "thm3";
    case Suite::Thm4:
        return "thm4";
    case Suite::Claim2:
        return "claim2";
    case Suite::Claim3:
        return "claim3";
    case Suite::MainVertex:
        return "main-vertex";
    case Suite::MainEdge:
        return "main-edge";
    case Suite::PolyColorers:
        return "poly-colorers";
    }
    return "?";
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (Suite s : {Suite::Prop1, Suite::Thm3, Suite::Thm4, Suite::Claim2, Suite::Claim3, Suite::MainVertex,
                    Suite::MainEdge, Suite::PolyColorers}) {
        if (to_string(s) == name)
            return s;
    }
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Thread-safe accumulator for one suite run.
class Recorder {
public:
    Recorder(std::string suite, const Options& opts) : opts_(opts), start_(Clock::now()) { report_.suite = std::move(suite); }

    void pass()
    {
        std::lock_guard lock(mu_);
        ++report_.run;
        ++report_.passed;
    }

    void fail_graph(const std::string& what, const Graph& g, const std::string& replay)
    {
        std::lock_guard lock(mu_);
        ++report_.run;
        const auto path = next_path(".col");
        Counterexample cx{what, {}};
        try {
            std::filesystem::create_directories(opts_.out_dir);
            dimacs::write_file(path, g, what + "\nreplay: " + replay);
            cx.file = path;
        } catch (const std::exception&) {
        }
        report_.counterexamples.push_back(std::move(cx));
    }

    void fail_formula(const std::string& what, const Formula& f, const std::string& replay)
    {
        std::lock_guard lock(mu_);
        ++report_.run;
        const auto path = next_path(".m1in3");
        Counterexample cx{what, {}};
        try {
            std::filesystem::create_directories(opts_.out_dir);
            write_formula_file(path, f, what + "\nreplay: " + replay);
            cx.file = path;
        } catch (const std::exception&) {
        }
        report_.counterexamples.push_back(std::move(cx));
    }

    void fail(const std::string& what)
    {
        std::lock_guard lock(mu_);
        ++report_.run;
        report_.counterexamples.push_back({what, {}});
    }

    void capped(std::string what)
    {
        std::lock_guard lock(mu_);
        report_.capped.push_back(std::move(what));
    }

    void note(std::string text)
    {
        std::lock_guard lock(mu_);
        report_.notes.push_back(std::move(text));
    }

    Report finish()
    {
        std::lock_guard lock(mu_);
        report_.wall_seconds = seconds_since(start_);
        return report_;
    }

private:
    std::filesystem::path next_path(const char* ext)
    {
        return opts_.out_dir / (report_.suite + "-" + std::to_string(report_.counterexamples.size()) + ext);
    }

    const Options& opts_;
    Clock::time_point start_;
    std::mutex mu_;
    Report report_;
};

// Runs independent cases; a case that trips a resource cap is reported on its
// own instead of aborting the suite.
template <class Body>
void for_cases(Recorder& rec, std::size_t count, int jobs, Body&& body)
{
    detail::parallel_for(count, jobs, [&](std::size_t i) {
        try {
            return body(i);
        } catch (const ResourceError& e) {
            rec.capped("case " + std::to_string(i) + ": " + e.what());
            return false;
        }
    });
}

ScanOptions serial_scan(const Options& opts)
{
    ScanOptions s;
    s.jobs = 1;
    s.chi.exact.max_vertices = opts.exact_cap;
    return s;
}

std::string seed_flag(const Options& opts) { return " --seed " + std::to_string(opts.seed); }

int formula_n(const Options& opts, int fallback) { return opts.n > 0 ? opts.n : fallback; }

std::vector<Formula> unsat_fixtures(const Options& opts)
{
    if (!opts.fixtures.empty())
        return opts.fixtures;
    return {find_unsat_formula(6, 1).formula};
}

} // namespace

Formula base_formula_n3()
{
    Formula f;
    f.n = 3;
    f.clauses.assign(3, {0, 1, 2});
    return f;
}

std::vector<std::pair<Formula, std::uint64_t>> formula_cases(int n, int samples, std::uint64_t seed)
{
    if (n == 3)
        return {{base_formula_n3(), 0}};
    std::vector<std::pair<Formula, std::uint64_t>> out;
    for (int i = 0; i < samples; ++i) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
        out.emplace_back(random_formula(n, s), s);
    }
    return out;
}

Formula rotate_clause(const Formula& f, int clause)
{
    Formula g = f;
    auto& cl = g.clauses.at(clause);
    std::rotate(cl.begin(), cl.begin() + 1, cl.end());
    return g;
}

Discovered find_unsat_formula(int n, std::uint64_t first_seed, int max_tries)
{
    for (int i = 0; i < max_tries; ++i) {
        const std::uint64_t s = first_seed + static_cast<std::uint64_t>(i);
        Formula f = random_formula(n, s);
        if (!oracle_1in3(f))
            return {std::move(f), s};
    }
    throw GenerationError("no non-1-satisfiable formula found at n=" + std::to_string(n));
}

// --------------------------------------------------------------- suites

Report prop1(const Options& opts)
{
    if (opts.max_n < 1 || opts.max_n > 7)
        throw ResourceError("prop1 enumerates 1..7 vertices, got --max-n " + std::to_string(opts.max_n));
    Recorder rec("prop1", opts);
    const int n = opts.max_n;
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    ScanOptions scan = serial_scan(opts);
    scan.vertices = false;
    for_cases(rec, count, opts.jobs, [&](std::size_t code) {
        const Graph g = graph_from_code(n, code);
        const CriticalityReport r = scan_criticality(g, scan);
        if (*r.critical_edges == *r.contraction_critical_edges)
            rec.pass();
        else
            rec.fail_graph("critical edges differ from contraction-critical edges (code " + std::to_string(code) + ")",
                           g, "critcol critical <file> --all");
        return false;
    });
    rec.note("labeled graphs on " + std::to_string(n) + " vertices: " + std::to_string(count));
    return rec.finish();
}

Report thm3(const Options& opts)
{
    Recorder rec("thm3", opts);
    const int samples = opts.samples > 0 ? opts.samples : 50;
    std::atomic<int> checks{0};
    std::atomic<int> colorable{0};
    for_cases(rec, samples, opts.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed, i));
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
        const Graph g = random_graph(n, p, rng);
        const ScanOptions scan = serial_scan(opts);
        const int chi_g = chi(g, scan.chi).chi;
        bool ok = true;
        std::string detail;
        for (int ell : {2, 3, 4}) {
            const Graph inst = build_clique_proof_instance(g, ell);
            const bool small = chi_g <= ell;
            const bool contraction = has_contraction_critical_edge(inst, scan);
            const bool vertex = has_critical_vertex(inst, scan);
            ++checks;
            if (small)
                ++colorable;
            if (small != contraction || small != vertex) {
                ok = false;
                detail += " ell=" + std::to_string(ell) + " chi<=ell:" + std::to_string(small) +
                          " contraction:" + std::to_string(contraction) + " vertex:" + std::to_string(vertex);
            }
        }
        if (ok)
            rec.pass();
        else
            rec.fail_graph("thm3 case " + std::to_string(i) + ":" + detail, g,
                           "critcol verify thm3" + seed_flag(opts));
        return false;
    });
    rec.note("(graph, ell) checks: " + std::to_string(checks.load()) + ", with chi <= ell: " +
             std::to_string(colorable.load()));
    return rec.finish();
}

Report thm4(const Options& opts)
{
    Recorder rec("thm4", opts);
    const int samples = opts.samples > 0 ? opts.samples : 30;
    std::atomic<int> four_chromatic{0};
    for_cases(rec, samples, opts.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed, i));
        Graph g;
        if (i % 5 == 4) {
            // Grötzsch plus a vertex on a random independent set keeps chi = 4
            const Graph f = grotzsch();
            if (i % 10 == 9) {
                g = f;
            } else {
                std::vector<Vertex> attach;
                std::bernoulli_distribution coin(0.5);
                for (Vertex v = 0; v < f.order(); ++v) {
                    if (coin(rng) && std::none_of(attach.begin(), attach.end(), [&](Vertex w) { return f.adjacent(v, w); }))
                        attach.push_back(v);
                }
                GraphBuilder b(f.order() + 1);
                for (const Edge& e : f.edges())
                    b.add_edge(e.u, e.v);
                for (Vertex v : attach)
                    b.add_edge(v, f.order());
                g = std::move(b).build();
            }
        } else {
            const int n = std::uniform_int_distribution<int>(4, 12)(rng);
            const double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
            g = random_triangle_free(n, p, rng);
        }
        const ScanOptions scan = serial_scan(opts);
        const int chi_g = chi(g, scan.chi).chi;
        if (chi_g > 3)
            ++four_chromatic;
        const Graph inst = build_grotzsch_instance(g);
        const bool small = chi_g <= 3;
        const bool vertex = has_critical_vertex(inst, scan);
        const bool contraction = has_contraction_critical_edge(inst, scan);
        if (small == vertex && small == contraction)
            rec.pass();
        else
            rec.fail_graph("thm4 case " + std::to_string(i) + ": chi<=3:" + std::to_string(small) +
                               " vertex:" + std::to_string(vertex) + " contraction:" + std::to_string(contraction),
                           g, "critcol verify thm4" + seed_flag(opts));
        return false;
    });
    rec.note("cases with chi(g) = 4: " + std::to_string(four_chromatic.load()));
    return rec.finish();
}

Report claim2(const Options& opts)
{
    Recorder rec("claim2", opts);
    const auto cases = formula_cases(formula_n(opts, 6), opts.samples > 0 ? opts.samples : 20, opts.seed);
    std::mutex mu;
    double slowest = 0.0;
    std::vector<std::string> sigmas(cases.size());
    for_cases(rec, cases.size(), opts.jobs, [&](std::size_t i) {
        const auto& [f, s] = cases[i];
        const auto t0 = Clock::now();
        const bool sat = oracle_1in3(f).has_value();
        const int sigma = clique_cover_number(build_vertex_gadget(f).graph, ExactOptions{opts.exact_cap}).size();
        const double dt = seconds_since(t0);
        {
            std::lock_guard lock(mu);
            slowest = std::max(slowest, dt);
            sigmas[i] = std::to_string(sigma) + (sat ? "s" : "u");
        }
        const bool lower_ok = 3 * sigma >= 10 * f.n;
        const bool iff_ok = sat == (3 * sigma == 10 * f.n);
        if (lower_ok && iff_ok)
            rec.pass();
        else
            rec.fail_formula("claim2: sat=" + std::to_string(sat) + " sigma=" + std::to_string(sigma) + " n=" +
                                 std::to_string(f.n) + " seed=" + std::to_string(s),
                             f, "critcol verify claim2 --n " + std::to_string(opts.n) + seed_flag(opts));
        return false;
    });
    std::string joined;
    for (const auto& s : sigmas)
        joined += (joined.empty() ? "" : " ") + s;
    rec.note("sigma per case (s = 1-satisfiable, u = not): " + joined);
    std::ostringstream t;
    t << "slowest exact sigma: " << slowest << " s";
    rec.note(t.str());
    return rec.finish();
}

Report claim3(const Options& opts)
{
    Recorder rec("claim3", opts);
    const Formula f = base_formula_n3();
    const GadgetGraph gg = build_vertex_gadget(f);
    const int sigma = clique_cover_number(gg.graph).size();

    // every minimum cover uses only 2- and 3-vertex cliques
    std::size_t covers = 0;
    bool sizes_ok = true;
    bool normalized_exists = false;
    enumerate_clique_covers(gg.graph, sigma, [&](const std::vector<std::vector<Vertex>>& cover) {
        ++covers;
        bool normalized = true;
        for (const auto& k : cover) {
            if (k.size() < 2 || k.size() > 3)
                sizes_ok = false;
            const bool has_filler = std::any_of(k.begin(), k.end(), [&](Vertex v) {
                return gg.roles[v].kind == VertexRole::Kind::Filler;
            });
            if (has_filler && k.size() != 2)
                normalized = false;
        }
        // a1 and a2 of every clause share a clique
        for (int c = 0; c < f.n && normalized; ++c) {
            const Vertex a1 = gg.clause_cycle(c)[1];
            const Vertex a2 = gg.clause_cycle(c)[2];
            normalized = std::any_of(cover.begin(), cover.end(), [&](const auto& k) {
                return std::find(k.begin(), k.end(), a1) != k.end() && std::find(k.begin(), k.end(), a2) != k.end();
            });
        }
        normalized_exists = normalized_exists || normalized;
        return true;
    });
    rec.note("n=3: sigma = " + std::to_string(sigma) + ", minimum covers enumerated: " + std::to_string(covers));
    if (covers > 0 && sizes_ok && 3 * sigma == 10 * f.n)
        rec.pass();
    else
        rec.fail_formula("claim3: a minimum cover of the n=3 gadget has a clique of size 1", f, "critcol verify claim3");
    if (normalized_exists)
        rec.pass();
    else
        rec.fail_formula("claim3: no minimum cover has the normalized shape", f, "critcol verify claim3");

    // non-1-satisfiable fixtures: some minimum cover has a singleton
    for (const Formula& u : unsat_fixtures(opts)) {
        const GadgetGraph ug = build_vertex_gadget(u);
        const int us = clique_cover_number(ug.graph, ExactOptions{opts.exact_cap}).size();
        bool singleton = false;
        CoverEnumOptions eo;
        eo.max_vertices = ug.graph.order();
        enumerate_clique_covers(
            ug.graph, us,
            [&](const auto& cover) {
                singleton = std::any_of(cover.begin(), cover.end(), [](const auto& k) { return k.size() == 1; });
                return !singleton;
            },
            eo);
        rec.note("fixture n=" + std::to_string(u.n) + ": sigma = " + std::to_string(us) +
                 ", singleton cover found: " + (singleton ? "yes" : "no"));
        if (singleton && 3 * us > 10 * u.n && !oracle_1in3(u))
            rec.pass();
        else
            rec.fail_formula("claim3: no minimum cover of the fixture gadget has a singleton", u, "critcol verify claim3 --fixture <file>");
    }
    return rec.finish();
}

Report main_vertex(const Options& opts)
{
    Recorder rec("main-vertex", opts);
    auto cases = formula_cases(formula_n(opts, 6), opts.samples > 0 ? opts.samples : 20, opts.seed);
    // order-independence spot check: first formula with one clause rotated
    cases.emplace_back(rotate_clause(cases.front().first, 0), cases.front().second);
    std::atomic<int> sat_count{0};
    for_cases(rec, cases.size(), opts.jobs, [&](std::size_t i) {
        const auto& [f, s] = cases[i];
        const bool sat = oracle_1in3(f).has_value();
        if (sat)
            ++sat_count;
        const bool critical = has_critical_vertex(to_target_instance(build_vertex_gadget(f)), serial_scan(opts));
        if (sat == !critical)
            rec.pass();
        else
            rec.fail_formula("main-vertex: sat=" + std::to_string(sat) + " critical vertex=" + std::to_string(critical) +
                                 " seed=" + std::to_string(s),
                             f, "critcol verify main-vertex --n " + std::to_string(opts.n) + seed_flag(opts));
        return false;
    });
    rec.note("formulas: " + std::to_string(cases.size()) + " (last one is a clause rotation), 1-satisfiable: " +
             std::to_string(sat_count.load()));
    return rec.finish();
}

Report main_edge(const Options& opts)
{
    Recorder rec("main-edge", opts);
    std::vector<std::pair<Formula, std::uint64_t>> cases = formula_cases(formula_n(opts, 3), opts.samples > 0 ? opts.samples : 1, opts.seed);
    for (const Formula& u : unsat_fixtures(opts))
        cases.emplace_back(u, 0);
    for_cases(rec, cases.size(), opts.jobs, [&](std::size_t i) {
        const auto& [f, s] = cases[i];
        const bool sat = oracle_1in3(f).has_value();
        const Graph target = to_target_instance(build_edge_gadget(f));
        const ScanOptions scan = serial_scan(opts);
        const bool critical = has_critical_edge(target, scan);
        const bool contraction = has_contraction_critical_edge(target, scan);
        if (sat == !critical && critical == contraction)
            rec.pass();
        else
            rec.fail_formula("main-edge: sat=" + std::to_string(sat) + " critical edge=" + std::to_string(critical) +
                                 " contraction-critical edge=" + std::to_string(contraction),
                             f, "critcol verify main-edge --n " + std::to_string(opts.n) + seed_flag(opts));
        return false;
    });
    return rec.finish();
}

Report poly_colorers(const Options& opts)
{
    Recorder rec("poly-colorers", opts);
    const ExactOptions exact{opts.exact_cap};

    // cotree route against the exact solver
    for_cases(rec, 200, opts.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed, i));
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        const Graph g = random_cograph(n, rng);
        const auto t = recognize_cograph(g);
        const int expected = chi_exact(g, exact).chi;
        if (t && evaluate(*t) == g && chi_cotree(*t).chi == expected)
            rec.pass();
        else
            rec.fail_graph("cotree disagrees with chi_exact (cograph " + std::to_string(i) + ")", g,
                           "critcol chi <file>");
        return false;
    });

    // (P1+P3)-free route on rejection-sampled inputs
    const std::size_t fallbacks_before = p1p3_fallback_count();
    const Graph p1p3 = named_pattern("P1+P3");
    std::atomic<std::size_t> rejected{0};
    for_cases(rec, 500, opts.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed ^ 0x5eedULL, i));
        Graph g;
        while (true) {
            const int n = std::uniform_int_distribution<int>(1, 12)(rng);
            const double p = std::bernoulli_distribution(0.8)(rng)
                                 ? std::uniform_real_distribution<double>(0.55, 1.0)(rng)
                                 : std::uniform_real_distribution<double>(0.0, 0.55)(rng);
            g = random_graph(n, p, rng);
            if (!contains_induced(g, p1p3))
                break;
            ++rejected;
        }
        const ColoringResult r = chi_p1p3_free(g);
        if (r.chi == chi_exact(g, exact).chi && is_valid_coloring(g, r.coloring, r.chi))
            rec.pass();
        else
            rec.fail_graph("chi_p1p3_free disagrees with chi_exact (sample " + std::to_string(i) + ")", g,
                           "critcol chi <file>");
        return false;
    });
    const std::size_t fallbacks = p1p3_fallback_count() - fallbacks_before;
    rec.note("(P1+P3)-free samples: 500 accepted, " + std::to_string(rejected.load()) +
             " rejected, structural fallbacks: " + std::to_string(fallbacks));
    if (fallbacks != 0)
        rec.fail("structural fallback used " + std::to_string(fallbacks) + " times");

    // exact solver against the brute-force oracle, all labeled graphs n <= 7
    std::atomic<std::size_t> exhaustive{0};
    for (int n = 0; n <= 7; ++n) {
        const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
        for_cases(rec, count, opts.jobs, [&](std::size_t code) {
            const Graph g = graph_from_code(n, code);
            if (chi_exact(g, exact).chi == chi_bruteforce(g))
                rec.pass();
            else
                rec.fail_graph("chi_exact disagrees with chi_bruteforce", g, "critcol chi <file>");
            ++exhaustive;
            return false;
        });
    }
    // and on random graphs just past the exhaustive range
    for_cases(rec, 1000, opts.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed ^ 0xb00fULL, i));
        const int n = std::uniform_int_distribution<int>(8, 10)(rng);
        const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
        if (chi_exact(g, exact).chi == chi_bruteforce(g))
            rec.pass();
        else
            rec.fail_graph("chi_exact disagrees with chi_bruteforce", g, "critcol chi <file>");
        return false;
    });
    rec.note("exhaustive labeled graphs n <= 7: " + std::to_string(exhaustive.load()) + ", random n in [8,10]: 1000");
    return rec.finish();
}

Report run(Suite suite, const Options& opts)
{
    switch (suite) {
    case Suite::Prop1:
        return prop1(opts);
    case Suite::Thm3:
        return thm3(opts);
    case Suite::Thm4:
        return thm4(opts);
    case Suite::Claim2:
        return claim2(opts);
    case Suite::Claim3:
        return claim3(opts);
    case Suite::MainVertex:
        return main_vertex(opts);
    case Suite::MainEdge:
        return main_edge(opts);
    case Suite::PolyColorers:
        return poly_colorers(opts);
    }
    throw ArgumentError("unknown suite");
}

} // namespace critcol::verify
