#include "critcol/chromatic.hpp"

#include "critcol/error.hpp"
#include "critcol/hfree.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>

namespace critcol {

std::string_view to_string(ColoringMethod m)
{
    switch (m) {
    case ColoringMethod::Exact:
        return "Exact";
    case ColoringMethod::Cotree:
        return "Cotree";
    case ColoringMethod::P1P3Structural:
        return "P1P3Structural";
    case ColoringMethod::BruteForce:
        return "BruteForce";
    }
    return "?";
}

bool is_valid_coloring(const Graph& g, const std::vector<int>& coloring, int chi)
{
    if (coloring.size() != static_cast<std::size_t>(g.order()))
        return false;
    std::vector<char> used(static_cast<std::size_t>(chi) + 1, 0);
    for (int c : coloring) {
        if (c < 1 || c > chi)
            return false;
        used[c] = 1;
    }
    if (std::count(used.begin() + 1, used.end(), 1) != chi)
        return false;
    for (const Edge& e : g.edges()) {
        if (coloring[e.u] == coloring[e.v])
            return false;
    }
    return true;
}

bool is_valid_clique_cover(const Graph& g, const CliqueCover& cover)
{
    std::vector<int> hits(g.order(), 0);
    for (const auto& k : cover.cliques) {
        if (k.empty() || !is_clique(g, k))
            return false;
        for (Vertex v : k) {
            if (v < 0 || v >= g.order())
                return false;
            ++hits[v];
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

CliqueCover clique_cover_number(const Graph& g, const ExactOptions& opts)
{
    const ColoringResult co = chi_exact(complement(g), opts);
    CliqueCover cover;
    cover.cliques.resize(co.chi);
    for (Vertex v = 0; v < g.order(); ++v)
        cover.cliques[co.coloring[v] - 1].push_back(v);
    if (!is_valid_clique_cover(g, cover))
        throw Error("clique cover from complement coloring failed validation");
    return cover;
}

// ---------------------------------------------------------------- cographs

namespace {

int build_cotree(const Graph& g, const std::vector<Vertex>& subset, Cotree& t)
{
    if (subset.size() == 1) {
        t.nodes.push_back({Cotree::Kind::Leaf, subset[0], {}});
        return static_cast<int>(t.nodes.size()) - 1;
    }
    const Graph sub = induced_subgraph(g, subset);
    auto parts = connected_components(sub);
    Cotree::Kind kind = Cotree::Kind::Union;
    if (parts.size() == 1) {
        parts = connected_components(complement(sub));
        kind = Cotree::Kind::Join;
        if (parts.size() == 1)
            return -1;
    }
    std::vector<int> children;
    for (const auto& part : parts) {
        std::vector<Vertex> mapped;
        mapped.reserve(part.size());
        for (Vertex v : part)
            mapped.push_back(subset[v]);
        const int child = build_cotree(g, mapped, t);
        if (child < 0)
            return -1;
        children.push_back(child);
    }
    t.nodes.push_back({kind, -1, std::move(children)});
    return static_cast<int>(t.nodes.size()) - 1;
}

void collect_leaves(const Cotree& t, int node, std::vector<Vertex>& out)
{
    const auto& nd = t.nodes[node];
    if (nd.kind == Cotree::Kind::Leaf) {
        out.push_back(nd.vertex);
        return;
    }
    for (int c : nd.children)
        collect_leaves(t, c, out);
}

int cotree_chi(const Cotree& t, int node, std::vector<int>& chi_of)
{
    const auto& nd = t.nodes[node];
    int value = nd.kind == Cotree::Kind::Leaf ? 1 : 0;
    for (int c : nd.children) {
        const int x = cotree_chi(t, c, chi_of);
        value = nd.kind == Cotree::Kind::Join ? value + x : std::max(value, x);
    }
    chi_of[node] = value;
    return value;
}

void cotree_color(const Cotree& t, int node, int offset, const std::vector<int>& chi_of, std::vector<int>& coloring)
{
    const auto& nd = t.nodes[node];
    if (nd.kind == Cotree::Kind::Leaf) {
        coloring[nd.vertex] = offset + 1;
        return;
    }
    for (int c : nd.children) {
        cotree_color(t, c, offset, chi_of, coloring);
        if (nd.kind == Cotree::Kind::Join)
            offset += chi_of[c];
    }
}

} // namespace

std::optional<Cotree> recognize_cograph(const Graph& g)
{
    Cotree t;
    t.vertex_count = g.order();
    if (g.empty())
        return t;
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        all[v] = v;
    t.root = build_cotree(g, all, t);
    if (t.root < 0)
        return std::nullopt;
    return t;
}

Graph evaluate(const Cotree& t)
{
    GraphBuilder b(t.vertex_count);
    for (const auto& nd : t.nodes) {
        if (nd.kind != Cotree::Kind::Join)
            continue;
        std::vector<std::vector<Vertex>> blocks;
        for (int c : nd.children) {
            blocks.emplace_back();
            collect_leaves(t, c, blocks.back());
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                for (Vertex u : blocks[i]) {
                    for (Vertex v : blocks[j])
                        b.add_edge(u, v);
                }
            }
        }
    }
    return std::move(b).build();
}

ColoringResult chi_cotree(const Cotree& t)
{
    ColoringResult out;
    out.method = ColoringMethod::Cotree;
    if (t.root < 0)
        return out;
    std::vector<int> chi_of(t.nodes.size(), 0);
    out.chi = cotree_chi(t, t.root, chi_of);
    out.coloring.assign(t.vertex_count, 0);
    cotree_color(t, t.root, 0, chi_of, out.coloring);
    return out;
}

// ------------------------------------------------------ (P1+P3)-free graphs

namespace {

std::atomic<std::size_t> g_p1p3_fallbacks{0};

const Graph& p1p3_pattern()
{
    static const Graph p = named_pattern("P1+P3");
    return p;
}

// Colors one co-component (its complement is connected). Returns the number
// of colors; local[i] in 1..k.
int color_cocomponent(const Graph& d, std::vector<int>& local)
{
    const int n = d.order();
    local.assign(n, 0);

    const auto comps = connected_components(d);
    const bool cliques = std::all_of(comps.begin(), comps.end(), [&](const auto& c) { return is_clique(d, c); });
    if (cliques) {
        int k = 0;
        for (const auto& c : comps) {
            for (std::size_t i = 0; i < c.size(); ++i)
                local[c[i]] = static_cast<int>(i) + 1;
            k = std::max(k, static_cast<int>(c.size()));
        }
        return k;
    }

    const Graph co = complement(d);
    if (!contains_induced(co, cycle_graph(3))) {
        // Color classes of d are cliques of co, i.e. edges or single vertices.
        using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
        BGraph bg(n);
        for (const Edge& e : co.edges())
            boost::add_edge(e.u, e.v, bg);
        std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(n);
        boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
        const auto none = boost::graph_traits<BGraph>::null_vertex();
        int k = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (local[v] != 0)
                continue;
            local[v] = ++k;
            if (mate[v] != none)
                local[static_cast<Vertex>(mate[v])] = k;
        }
        return k;
    }

    g_p1p3_fallbacks.fetch_add(1);
    std::cerr << "warning: (P1+P3)-free co-component on " << n
              << " vertices matched neither structural case; using exact coloring\n";
    const ColoringResult r = chi_exact(d, ExactOptions{std::max(64, n)});
    local = r.coloring;
    return r.chi;
}

ColoringResult p1p3_unchecked(const Graph& g)
{
    ColoringResult out;
    out.method = ColoringMethod::P1P3Structural;
    out.coloring.assign(g.order(), 0);
    for (const auto& comp : connected_components(g)) {
        const Graph sub = induced_subgraph(g, comp);
        int offset = 0;
        for (const auto& part : connected_components(complement(sub))) {
            std::vector<int> local;
            const int k = color_cocomponent(induced_subgraph(sub, part), local);
            for (std::size_t i = 0; i < part.size(); ++i)
                out.coloring[comp[part[i]]] = offset + local[i];
            offset += k;
        }
        out.chi = std::max(out.chi, offset);
    }
    if (!is_valid_coloring(g, out.coloring, out.chi))
        throw Error("chi_p1p3_free produced an invalid certificate");
    return out;
}

} // namespace

std::size_t p1p3_fallback_count() { return g_p1p3_fallbacks.load(); }
void reset_p1p3_fallback_count() { g_p1p3_fallbacks.store(0); }

ColoringResult chi_p1p3_free(const Graph& g)
{
    if (auto w = find_induced(g, p1p3_pattern())) {
        throw ArgumentError("chi_p1p3_free: graph contains an induced P1+P3 on vertices " +
                            std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                            std::to_string((*w)[2]) + "," + std::to_string((*w)[3]));
    }
    return p1p3_unchecked(g);
}

// --------------------------------------------------------------- dispatcher

ColoringResult chi(const Graph& g, const ChiOptions& opts)
{
    if (g.empty())
        return {};
    if (opts.allow_polynomial) {
        if (auto t = recognize_cograph(g)) {
            ColoringResult r = chi_cotree(*t);
            if (!is_valid_coloring(g, r.coloring, r.chi))
                throw Error("cotree coloring failed validation");
            return r;
        }
        if (!contains_induced(g, p1p3_pattern()))
            return p1p3_unchecked(g);
    }
    return chi_exact(g, opts.exact);
}

std::optional<std::vector<int>> colorable_with(const Graph& g, int k, const ChiOptions& opts)
{
    if (g.empty())
        return std::vector<int>{};
    if (opts.allow_polynomial) {
        std::optional<ColoringResult> r;
        if (auto t = recognize_cograph(g))
            r = chi_cotree(*t);
        else if (!contains_induced(g, p1p3_pattern()))
            r = p1p3_unchecked(g);
        if (r) {
            if (r->chi > k)
                return std::nullopt;
            return std::move(r->coloring);
        }
    }
    return find_coloring(g, k, opts.exact);
}

} // namespace critcol
