#include "critcol/reductions.hpp"

#include "critcol/error.hpp"
#include "critcol/hfree.hpp"

#include <algorithm>

namespace critcol {

Graph build_clique_proof_instance(const Graph& g, int ell)
{
    if (ell < 1)
        throw ArgumentError("build_clique_proof_instance needs ell >= 1");
    const Graph out = disjoint_union(disjoint_union(g, g), complete_graph(ell + 1));
    std::vector<std::string> labels;
    labels.reserve(out.order());
    for (Vertex v = 0; v < g.order(); ++v)
        labels.push_back("A:" + g.label(v));
    for (Vertex v = 0; v < g.order(); ++v)
        labels.push_back("B:" + g.label(v));
    for (int i = 0; i <= ell; ++i)
        labels.push_back("K:" + std::to_string(i));
    return out.with_labels(std::move(labels));
}

Graph build_grotzsch_instance(const Graph& g)
{
    if (auto t = find_induced(g, cycle_graph(3))) {
        throw ArgumentError("build_grotzsch_instance: input has a triangle on vertices " + std::to_string((*t)[0]) +
                            "," + std::to_string((*t)[1]) + "," + std::to_string((*t)[2]));
    }
    const Graph f = grotzsch();
    const Graph out = disjoint_union(disjoint_union(g, g), f);
    std::vector<std::string> labels;
    labels.reserve(out.order());
    for (Vertex v = 0; v < g.order(); ++v)
        labels.push_back("A:" + g.label(v));
    for (Vertex v = 0; v < g.order(); ++v)
        labels.push_back("B:" + g.label(v));
    for (Vertex v = 0; v < f.order(); ++v)
        labels.push_back("F:" + std::to_string(v));
    return out.with_labels(std::move(labels));
}

// ---------------------------------------------------------------- gadgets

namespace {

struct CycleLayout {
    int length;
    std::array<int, 3> slots; // cycle positions of c(x), c(y), c(z)
};

CycleLayout layout(GadgetVariant v)
{
    if (v == GadgetVariant::VertexC7)
        return {7, {0, 3, 5}};
    return {11, {0, 3, 7}};
}

void require_valid(const Formula& f)
{
    auto vs = validate(f);
    if (!vs.empty())
        throw FormulaError(std::move(vs));
}

} // namespace

int cycle_length(GadgetVariant v) { return layout(v).length; }

Vertex GadgetGraph::clause_vertex(int clause, int slot) const
{
    const CycleLayout l = layout(variant);
    return clause * l.length + l.slots.at(slot);
}

std::vector<Vertex> GadgetGraph::clause_cycle(int clause) const
{
    const int len = cycle_length(variant);
    std::vector<Vertex> out(len);
    for (int i = 0; i < len; ++i)
        out[i] = clause * len + i;
    return out;
}

GadgetGraph build_gadget(const Formula& f, GadgetVariant variant)
{
    require_valid(f);
    const CycleLayout l = layout(variant);
    const int n = f.n;
    GraphBuilder b(l.length * n);
    GadgetGraph gg;
    gg.variant = variant;
    gg.formula = f;
    gg.roles.resize(l.length * n);

    std::vector<std::vector<Vertex>> occurrences(n);
    for (int c = 0; c < n; ++c) {
        const Vertex base = c * l.length;
        for (int i = 0; i < l.length; ++i)
            b.add_edge(base + i, base + (i + 1) % l.length);
        int filler = 0;
        for (int i = 0; i < l.length; ++i) {
            VertexRole& r = gg.roles[base + i];
            r.clause = c;
            const auto slot = std::find(l.slots.begin(), l.slots.end(), i);
            if (slot != l.slots.end()) {
                const int x = f.clauses[c][slot - l.slots.begin()];
                r.kind = VertexRole::Kind::ClauseVar;
                r.variable = x;
                occurrences[x].push_back(base + i);
                b.set_label(base + i, "c" + std::to_string(c + 1) + "(x" + std::to_string(x + 1) + ")");
            } else {
                r.kind = VertexRole::Kind::Filler;
                r.filler = ++filler;
                b.set_label(base + i, "a" + std::to_string(filler) + "^c" + std::to_string(c + 1));
            }
        }
    }
    for (const auto& occ : occurrences) {
        b.add_edge(occ[0], occ[1]);
        b.add_edge(occ[0], occ[2]);
        b.add_edge(occ[1], occ[2]);
    }
    gg.graph = std::move(b).build();

    const std::size_t expected_edges = static_cast<std::size_t>(l.length + 3) * n;
    if (gg.graph.order() != l.length * n || gg.graph.edge_count() != expected_edges)
        throw Error("gadget self-check failed: unexpected vertex or edge count");
    return gg;
}

GadgetGraph build_vertex_gadget(const Formula& f) { return build_gadget(f, GadgetVariant::VertexC7); }
GadgetGraph build_edge_gadget(const Formula& f) { return build_gadget(f, GadgetVariant::EdgeC11); }

Graph to_target_instance(const GadgetGraph& gg) { return complement(gg.graph); }

// ------------------------------------------------------ cover enumeration

namespace {

class CoverEnumerator {
public:
    CoverEnumerator(const Graph& g, int size,
                    const std::function<bool(const std::vector<std::vector<Vertex>>&)>& visit)
        : g_(g), size_(size), visit_(visit), covered_(g.order(), 0)
    {
    }

    std::size_t run()
    {
        if (size_ >= 0)
            rec(g_.order());
        return visited_;
    }

private:
    // Pairwise non-adjacent uncovered vertices need pairwise distinct cliques.
    int independent_bound() const
    {
        std::vector<Vertex> picked;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (covered_[v])
                continue;
            bool free = true;
            for (Vertex p : picked) {
                if (g_.adjacent(p, v)) {
                    free = false;
                    break;
                }
            }
            if (free)
                picked.push_back(v);
        }
        return static_cast<int>(picked.size());
    }

    // returns false when the visitor asked to stop
    bool rec(int remaining)
    {
        if (remaining == 0) {
            if (static_cast<int>(cover_.size()) != size_)
                return true;
            ++visited_;
            return visit_(cover_);
        }
        if (static_cast<int>(cover_.size()) + independent_bound() > size_)
            return true;
        Vertex v = 0;
        while (covered_[v])
            ++v;
        std::vector<Vertex> candidates;
        for (Vertex w = v + 1; w < g_.order(); ++w) {
            if (!covered_[w] && g_.adjacent(v, w))
                candidates.push_back(w);
        }
        std::vector<Vertex> clique{v};
        return grow(clique, candidates, 0, remaining);
    }

    // Tries `clique` as the next part, then every extension by a later candidate.
    bool grow(std::vector<Vertex>& clique, const std::vector<Vertex>& candidates, std::size_t from, int remaining)
    {
        for (Vertex x : clique)
            covered_[x] = 1;
        cover_.push_back(clique);
        const bool go_on = rec(remaining - static_cast<int>(clique.size()));
        cover_.pop_back();
        for (Vertex x : clique)
            covered_[x] = 0;
        if (!go_on)
            return false;

        for (std::size_t i = from; i < candidates.size(); ++i) {
            const Vertex w = candidates[i];
            const bool fits = std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g_.adjacent(x, w); });
            if (!fits)
                continue;
            clique.push_back(w);
            const bool cont = grow(clique, candidates, i + 1, remaining);
            clique.pop_back();
            if (!cont)
                return false;
        }
        return true;
    }

    const Graph& g_;
    int size_;
    const std::function<bool(const std::vector<std::vector<Vertex>>&)>& visit_;
    std::vector<char> covered_;
    std::vector<std::vector<Vertex>> cover_;
    std::size_t visited_ = 0;
};

void check_enum_cap(const Graph& g, const CoverEnumOptions& opts)
{
    if (g.order() > opts.max_vertices)
        throw ResourceError("clique cover enumeration on " + std::to_string(g.order()) + " vertices exceeds cap " +
                            std::to_string(opts.max_vertices));
}

} // namespace

std::size_t enumerate_clique_covers(const Graph& g, int size,
                                    const std::function<bool(const std::vector<std::vector<Vertex>>&)>& visit,
                                    const CoverEnumOptions& opts)
{
    check_enum_cap(g, opts);
    return CoverEnumerator(g, size, visit).run();
}

int min_clique_cover_size_by_enumeration(const Graph& g, const CoverEnumOptions& opts)
{
    check_enum_cap(g, opts);
    for (int s = 0;; ++s) {
        bool found = false;
        enumerate_clique_covers(
            g, s,
            [&](const auto&) {
                found = true;
                return false;
            },
            opts);
        if (found)
            return s;
    }
}

} // namespace critcol
