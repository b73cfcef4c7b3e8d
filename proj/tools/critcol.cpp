// critcol: chromatic criticality toolkit.
//
// Exit codes: 0 success / verified, 1 counterexample found, 2 usage or input
// error, 3 resource cap exceeded.

#include "critcol/chromatic.hpp"
#include "critcol/criticality.hpp"
#include "critcol/dimacs.hpp"
#include "critcol/error.hpp"
#include "critcol/hfree.hpp"
#include "critcol/reductions.hpp"
#include "critcol/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace critcol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Globals {
    bool json = false;
    bool deterministic = false;
    std::uint64_t seed = 1;
    int jobs = 0;
    int cap = 64;
    bool cap_given = false;
};

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("M1IN3_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric M1IN3_SEED=" << env << '\n';
        }
    }
    return 1;
}

json envelope(const Globals& g, std::string_view command)
{
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["seed"] = g.seed;
    if (!g.deterministic)
        j["timestamp"] = static_cast<long long>(std::time(nullptr));
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json edges_json(const std::vector<Edge>& edges)
{
    json a = json::array();
    for (const Edge& e : edges)
        a.push_back({e.u + 1, e.v + 1});
    return a;
}

json vertices_json(const std::vector<Vertex>& vs)
{
    json a = json::array();
    for (Vertex v : vs)
        a.push_back(v + 1);
    return a;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1); }

// Patterns are files when they exist on disk, otherwise small-graph names.
NamedPattern load_pattern(const std::string& arg)
{
    if (fs::exists(arg))
        return {fs::path(arg).stem().string(), dimacs::read_file(arg)};
    return {arg, named_pattern(arg)};
}

void write_graph(const Graph& g, const std::string& out, const std::string& comment)
{
    if (out.empty() || out == "-")
        dimacs::write(std::cout, g, comment);
    else
        dimacs::write_file(out, g, comment);
}

// ------------------------------------------------------------- commands

int cmd_chi(const Globals& gl, const std::string& file, bool certificate)
{
    const Graph g = dimacs::read_file(file);
    ChiOptions opts;
    opts.exact.max_vertices = gl.cap;
    const ColoringResult r = chi(g, opts);
    if (gl.json) {
        json j = envelope(gl, "chi");
        j["vertices"] = g.order();
        j["edges"] = g.edge_count();
        j["chi"] = r.chi;
        j["method"] = to_string(r.method);
        if (certificate)
            j["coloring"] = r.coloring;
        emit(j);
    } else {
        std::cout << "chi=" << r.chi << " method=" << to_string(r.method) << '\n';
        if (certificate) {
            for (Vertex v = 0; v < g.order(); ++v)
                std::cout << "v " << v + 1 << ' ' << r.coloring[v] << '\n';
        }
    }
    return kExitOk;
}

int cmd_sigma(const Globals& gl, const std::string& file)
{
    const Graph g = dimacs::read_file(file);
    const CliqueCover cover = clique_cover_number(g, ExactOptions{gl.cap});
    if (gl.json) {
        json j = envelope(gl, "sigma");
        j["sigma"] = cover.size();
        json cl = json::array();
        for (const auto& k : cover.cliques)
            cl.push_back(vertices_json(k));
        j["cover"] = cl;
        emit(j);
    } else {
        std::cout << "sigma=" << cover.size() << '\n';
        for (const auto& k : cover.cliques) {
            std::cout << "clique";
            for (Vertex v : k)
                std::cout << ' ' << v + 1;
            std::cout << '\n';
        }
    }
    return kExitOk;
}

struct CriticalArgs {
    std::string file;
    bool vertices = false;
    bool edges = false;
    bool contraction = false;
    bool all = false;
    bool exists = false;
    bool witnesses = false;
    bool assume_prop1 = false;
};

int cmd_critical(const Globals& gl, CriticalArgs a)
{
    const Graph g = dimacs::read_file(a.file);
    if (a.all || (!a.vertices && !a.edges && !a.contraction))
        a.vertices = a.edges = a.contraction = true;
    ScanOptions opts;
    opts.vertices = a.vertices;
    opts.edges = a.edges;
    opts.contraction = a.contraction;
    opts.keep_witnesses = a.witnesses;
    opts.assume_prop1 = a.assume_prop1;
    opts.jobs = gl.jobs;
    opts.chi.exact.max_vertices = gl.cap;

    if (a.exists) {
        json j = envelope(gl, "critical");
        j["chi"] = chi(g, opts.chi).chi;
        if (a.vertices)
            j["has_critical_vertex"] = has_critical_vertex(g, opts);
        if (a.edges)
            j["has_critical_edge"] = has_critical_edge(g, opts);
        if (a.contraction)
            j["has_contraction_critical_edge"] = has_contraction_critical_edge(g, opts);
        if (gl.json) {
            emit(j);
        } else {
            std::cout << "chi=" << j["chi"] << '\n';
            for (const char* key : {"has_critical_vertex", "has_critical_edge", "has_contraction_critical_edge"}) {
                if (j.contains(key))
                    std::cout << key << '=' << (j[key].get<bool>() ? "true" : "false") << '\n';
            }
        }
        return kExitOk;
    }

    const CriticalityReport r = scan_criticality(g, opts);
    if (gl.json) {
        json j = envelope(gl, "critical");
        j["chi"] = r.chi;
        if (r.critical_vertices)
            j["critical_vertices"] = vertices_json(*r.critical_vertices);
        if (r.critical_edges)
            j["critical_edges"] = edges_json(*r.critical_edges);
        if (r.contraction_critical_edges)
            j["contraction_critical_edges"] = edges_json(*r.contraction_critical_edges);
        if (a.witnesses) {
            json w;
            for (const auto& [v, c] : r.vertex_witnesses)
                w["vertices"][std::to_string(v + 1)] = c;
            for (const auto& [e, c] : r.edge_witnesses)
                w["edges"][edge_text(e)] = c;
            for (const auto& [e, c] : r.contraction_witnesses)
                w["contractions"][edge_text(e)] = c;
            j["witnesses"] = w;
        }
        emit(j);
        return kExitOk;
    }
    std::cout << "chi=" << r.chi << '\n';
    if (r.critical_vertices) {
        std::cout << "critical vertices (" << r.critical_vertices->size() << "):";
        for (Vertex v : *r.critical_vertices)
            std::cout << ' ' << v + 1;
        std::cout << '\n';
    }
    auto print_edges = [](const char* title, const std::vector<Edge>& es) {
        std::cout << title << " (" << es.size() << "):";
        for (const Edge& e : es)
            std::cout << ' ' << edge_text(e);
        std::cout << '\n';
    };
    if (r.critical_edges)
        print_edges("critical edges", *r.critical_edges);
    if (r.contraction_critical_edges)
        print_edges("contraction-critical edges", *r.contraction_critical_edges);
    return kExitOk;
}

int cmd_classify(const Globals& gl, const std::string& file)
{
    const Graph h = dimacs::read_file(file);
    const HClassification c = classify_h(h);
    if (gl.json) {
        json j = envelope(gl, "classify");
        j["verdict"] = to_string(c.verdict);
        j["rule"] = to_string(c.rule);
        emit(j);
    } else {
        std::cout << to_string(c.verdict) << " (rule: " << to_string(c.rule) << ")\n";
    }
    return kExitOk;
}

int cmd_hfree(const Globals& gl, const std::string& file, const std::vector<std::string>& specs)
{
    const Graph g = dimacs::read_file(file);
    std::vector<NamedPattern> patterns;
    for (const auto& s : specs)
        patterns.push_back(load_pattern(s));
    const FreenessReport r = is_h_free(g, patterns);
    if (gl.json) {
        json j = envelope(gl, "hfree");
        j["free"] = r.free();
        json ps = json::array();
        for (const auto& p : r.patterns) {
            json e;
            e["pattern"] = p.name;
            e["contained"] = p.contained;
            if (p.witness)
                e["witness"] = vertices_json(*p.witness);
            ps.push_back(e);
        }
        j["patterns"] = ps;
        emit(j);
    } else {
        for (const auto& p : r.patterns) {
            std::cout << p.name << ": " << (p.contained ? "contained" : "absent");
            if (p.witness) {
                std::cout << " at";
                for (Vertex v : *p.witness)
                    std::cout << ' ' << v + 1;
            }
            std::cout << '\n';
        }
        std::cout << (r.free() ? "free" : "not free") << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const Globals& gl, const std::string& file)
{
    const Formula f = read_formula_file(file);
    const auto a = oracle_1in3(f);
    if (gl.json) {
        json j = envelope(gl, "oracle");
        j["n"] = f.n;
        j["satisfiable"] = a.has_value();
        if (a) {
            json t = json::array();
            for (int x = 0; x < f.n; ++x) {
                if ((*a)[x])
                    t.push_back(x + 1);
            }
            j["true_variables"] = t;
        }
        emit(j);
    } else if (a) {
        std::cout << "1-satisfiable; true variables:";
        for (int x = 0; x < f.n; ++x) {
            if ((*a)[x])
                std::cout << ' ' << x + 1;
        }
        std::cout << '\n';
    } else {
        std::cout << "not 1-satisfiable\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    int max_n = 6;
    int samples = 0;
    int n = 0;
    std::vector<std::string> fixtures;
    std::string out = "counterexamples";
};

int cmd_verify(const Globals& gl, const VerifyArgs& a)
{
    const auto suite = verify::parse_suite(a.suite);
    if (!suite)
        throw ArgumentError("unknown suite `" + a.suite + "`");
    verify::Options o;
    o.seed = gl.seed;
    o.jobs = gl.jobs;
    o.max_n = a.max_n;
    o.samples = a.samples;
    o.n = a.n;
    o.out_dir = a.out;
    o.exact_cap = gl.cap_given ? gl.cap : 128; // gadget targets exceed the interactive default
    for (const auto& f : a.fixtures)
        o.fixtures.push_back(read_formula_file(f));

    const verify::Report r = verify::run(*suite, o);
    if (gl.json) {
        json j = envelope(gl, "verify");
        j["suite"] = r.suite;
        j["run"] = r.run;
        j["passed"] = r.passed;
        json cx = json::array();
        for (const auto& c : r.counterexamples)
            cx.push_back({{"description", c.description}, {"file", c.file.string()}});
        j["counterexamples"] = cx;
        j["capped"] = r.capped;
        j["notes"] = r.notes;
        if (!gl.deterministic)
            j["wall_seconds"] = r.wall_seconds;
        emit(j);
    } else {
        std::cout << "suite " << r.suite << ": " << r.passed << "/" << r.run << " passed";
        if (!gl.deterministic)
            std::cout << " in " << r.wall_seconds << " s";
        std::cout << " (seed " << gl.seed << ")\n";
        for (const auto& n : r.notes)
            std::cout << "  " << n << '\n';
        for (const auto& c : r.capped)
            std::cout << "  CAPPED: " << c << '\n';
        for (const auto& c : r.counterexamples)
            std::cout << "  COUNTEREXAMPLE: " << c.description << (c.file.empty() ? "" : " -> " + c.file.string())
                      << '\n';
    }
    if (!r.ok())
        return kExitCounterexample;
    return r.capped.empty() ? kExitOk : kExitResource;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"critcol: critical vertices and edges under chromatic number, with reduction generators"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Globals gl;
    gl.seed = default_seed();
    app.add_flag("--json", gl.json, "Print a JSON report");
    app.add_flag("--deterministic", gl.deterministic, "Omit timestamps and timings from reports");
    app.add_option("--seed", gl.seed, "Seed for all randomness (default: $M1IN3_SEED or 1)");
    app.add_option("--jobs", gl.jobs, "Worker threads (0 = hardware concurrency)");
    auto* cap_opt =
        app.add_option("--cap", gl.cap, "Vertex cap for the exact coloring solver")->check(CLI::PositiveNumber);

    std::function<int()> action;

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "Chromatic number with method and optional certificate");
    std::string chi_file;
    bool certificate = false;
    chi_cmd->add_option("file", chi_file, "DIMACS graph")->required();
    chi_cmd->add_flag("--certificate", certificate, "Print the coloring");
    chi_cmd->callback([&] { action = [&] { return cmd_chi(gl, chi_file, certificate); }; });

    // sigma
    auto* sigma_cmd = app.add_subcommand("sigma", "Clique cover number and a minimum cover");
    std::string sigma_file;
    sigma_cmd->add_option("file", sigma_file, "DIMACS graph")->required();
    sigma_cmd->callback([&] { action = [&] { return cmd_sigma(gl, sigma_file); }; });

    // critical
    auto* crit_cmd = app.add_subcommand("critical", "Critical vertices, critical edges, contraction-critical edges");
    CriticalArgs ca;
    crit_cmd->add_option("file", ca.file, "DIMACS graph")->required();
    crit_cmd->add_flag("--vertices", ca.vertices, "Scan vertices");
    crit_cmd->add_flag("--edges", ca.edges, "Scan edges by deletion");
    crit_cmd->add_flag("--contraction", ca.contraction, "Scan edges by contraction");
    crit_cmd->add_flag("--all", ca.all, "Scan everything (default)");
    crit_cmd->add_flag("--exists", ca.exists, "Only decide existence, stopping at the first hit");
    crit_cmd->add_flag("--witnesses", ca.witnesses, "Include the (chi-1)-colorings certifying each element");
    crit_cmd->add_flag("--assume-prop1", ca.assume_prop1, "Reuse critical edges as contraction-critical edges");
    crit_cmd->callback([&] { action = [&] { return cmd_critical(gl, ca); }; });

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "Complexity of the criticality problems on H-free graphs");
    std::string h_file;
    std::string h_positional;
    cls_cmd->set_help_flag("--help", "Print this help message and exit"); // frees --h
    cls_cmd->add_option("--h", h_file, "DIMACS file of the forbidden graph H");
    cls_cmd->add_option("file", h_positional, "DIMACS file of H (alternative to --h)");
    cls_cmd->callback([&] {
        if (h_file.empty() == h_positional.empty())
            throw CLI::ValidationError("classify", "give H either as --h <file> or as a positional file");
        action = [&] { return cmd_classify(gl, h_file.empty() ? h_positional : h_file); };
    });

    // hfree
    auto* hf_cmd = app.add_subcommand("hfree", "Report which patterns occur as induced subgraphs");
    std::string g_file;
    std::vector<std::string> patterns;
    hf_cmd->add_option("--g", g_file, "DIMACS host graph")->required();
    hf_cmd->add_option("--patterns", patterns, "Comma-separated DIMACS files or names (P4, 2P1+P2, co-2P1+P2, K13, ...)")
        ->required()
        ->delimiter(',');
    hf_cmd->callback([&] { action = [&] { return cmd_hfree(gl, g_file, patterns); }; });

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate reduction instances as DIMACS");
    gen_cmd->require_subcommand(1);
    std::string gen_out;
    bool gen_complement = false;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", gen_out, "Output file (default stdout)");
        c->add_flag("--complement", gen_complement, "Emit the complement (the target-class instance)");
    };
    auto finish_gen = [&](const Graph& g, const std::string& comment) {
        write_graph(gen_complement ? complement(g) : g, gen_out, comment + (gen_complement ? " (complement)" : ""));
        return kExitOk;
    };

    auto* gen_cp = gen_cmd->add_subcommand("clique-proof", "2G + K_{ell+1}");
    std::string gen_g;
    int ell = 0;
    gen_cp->add_option("--g", gen_g, "DIMACS input graph")->required();
    gen_cp->add_option("--ell", ell, "ell >= 1")->required()->check(CLI::PositiveNumber);
    add_common(gen_cp);
    gen_cp->callback([&] {
        action = [&] {
            return finish_gen(build_clique_proof_instance(dimacs::read_file(gen_g), ell),
                              "clique-proof instance, ell=" + std::to_string(ell));
        };
    });

    auto* gen_gr = gen_cmd->add_subcommand("grotzsch", "2G + Grötzsch graph (G triangle-free)");
    gen_gr->add_option("--g", gen_g, "DIMACS input graph")->required();
    add_common(gen_gr);
    gen_gr->callback([&] {
        action = [&] { return finish_gen(build_grotzsch_instance(dimacs::read_file(gen_g)), "Grötzsch instance"); };
    });

    std::string gen_f;
    auto* gen_sv = gen_cmd->add_subcommand("sat-vertex", "C7 clause-gadget graph of a formula");
    gen_sv->add_option("--f", gen_f, "Formula file")->required();
    add_common(gen_sv);
    gen_sv->callback([&] {
        action = [&] { return finish_gen(build_vertex_gadget(read_formula_file(gen_f)).graph, "C7 gadget graph"); };
    });

    auto* gen_se = gen_cmd->add_subcommand("sat-edge", "C11 clause-gadget graph of a formula");
    gen_se->add_option("--f", gen_f, "Formula file")->required();
    add_common(gen_se);
    gen_se->callback([&] {
        action = [&] { return finish_gen(build_edge_gadget(read_formula_file(gen_f)).graph, "C11 gadget graph"); };
    });

    auto* gen_fm = gen_cmd->add_subcommand("formula", "Random Monotone 1-in-3-SAT formula (uses --seed)");
    int gen_n = 6;
    gen_fm->add_option("--n", gen_n, "Variable count (>= 3)")->required();
    gen_fm->add_option("--out", gen_out, "Output file (default stdout)");
    gen_fm->callback([&] {
        action = [&] {
            const std::string text =
                to_string(random_formula(gen_n, gl.seed), "random_formula n=" + std::to_string(gen_n) +
                                                              " seed=" + std::to_string(gl.seed));
            if (gen_out.empty() || gen_out == "-") {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                out << text;
            }
            return kExitOk;
        };
    });

    auto* gen_nm = gen_cmd->add_subcommand("named", "Named graph: path, cycle, clique, empty, grotzsch, or a pattern name");
    std::string kind;
    int r = 0;
    gen_nm->add_option("kind", kind, "path | cycle | clique | empty | grotzsch | <pattern name>")->required();
    gen_nm->add_option("--r", r, "Size parameter");
    gen_nm->add_option("--out", gen_out, "Output file (default stdout)");
    gen_nm->callback([&] {
        action = [&] {
            Graph g;
            if (kind == "path")
                g = make_named(NamedKind::Path, r);
            else if (kind == "cycle")
                g = make_named(NamedKind::Cycle, r);
            else if (kind == "clique")
                g = make_named(NamedKind::Clique, r);
            else if (kind == "empty")
                g = make_named(NamedKind::Empty, r);
            else if (kind == "grotzsch")
                g = grotzsch();
            else
                g = named_pattern(kind);
            write_graph(g, gen_out, kind);
            return kExitOk;
        };
    });

    // oracle
    auto* or_cmd = app.add_subcommand("oracle", "Exhaustive Monotone 1-in-3-SAT check");
    std::string or_file;
    or_cmd->add_option("--f,file", or_file, "Formula file")->required();
    or_cmd->callback([&] { action = [&] { return cmd_oracle(gl, or_file); }; });

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
    VerifyArgs va;
    ver_cmd->add_option("suite", va.suite, "prop1 | thm3 | thm4 | claim2 | claim3 | main-vertex | main-edge | poly-colorers")
        ->required();
    ver_cmd->add_option("--max-n", va.max_n, "prop1: vertex count of the exhaustive enumeration");
    ver_cmd->add_option("--samples", va.samples, "Number of random cases (suite default when omitted)");
    ver_cmd->add_option("--n", va.n, "Formula size for claim2 / main-vertex / main-edge");
    ver_cmd->add_option("--fixture", va.fixtures, "Non-1-satisfiable formula file(s) for claim3 / main-edge");
    ver_cmd->add_option("--out", va.out, "Directory for counterexample files");
    ver_cmd->callback([&] { action = [&] { return cmd_verify(gl, va); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    gl.cap_given = cap_opt->count() > 0;
    try {
        if (!gl.json && !gl.deterministic && app.got_subcommand("verify"))
            std::cerr << "seed=" << gl.seed << '\n';
        return action();
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const FormulaError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
