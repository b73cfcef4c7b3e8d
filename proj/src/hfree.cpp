#include "critcol/hfree.hpp"

#include "critcol/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace critcol {

namespace {

class InducedSearch {
public:
    InducedSearch(const Graph& g, const Graph& h) : g_(g), h_(h)
    {
        // Pattern order: repeatedly take the unplaced vertex with the most
        // placed neighbours, then the highest degree. Connected patterns are
        // then matched along their edges.
        const int k = h.order();
        std::vector<char> placed(k, 0);
        for (int step = 0; step < k; ++step) {
            int best = -1;
            int best_links = -1;
            int best_deg = -1;
            for (Vertex v = 0; v < k; ++v) {
                if (placed[v])
                    continue;
                int links = 0;
                for (Vertex w : order_) {
                    if (h.adjacent(v, w))
                        ++links;
                }
                const int deg = h.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed[best] = 1;
            order_.push_back(best);
        }
        host_deg_.resize(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            host_deg_[v] = g.degree(v);
        image_.assign(k, -1);
        used_.assign(g.order(), 0);
    }

    std::optional<Embedding> run()
    {
        if (h_.order() > g_.order())
            return std::nullopt;
        if (extend(0))
            return image_;
        return std::nullopt;
    }

private:
    bool extend(int depth)
    {
        if (depth == static_cast<int>(order_.size()))
            return true;
        const Vertex p = order_[depth];
        const int pdeg = h_.degree(p);
        const int pnon = h_.order() - 1 - pdeg;
        for (Vertex x = 0; x < g_.order(); ++x) {
            if (used_[x])
                continue;
            if (host_deg_[x] < pdeg || g_.order() - 1 - host_deg_[x] < pnon)
                continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                const Vertex q = order_[i];
                ok = h_.adjacent(p, q) == g_.adjacent(x, image_[q]);
            }
            if (!ok)
                continue;
            image_[p] = x;
            used_[x] = 1;
            if (extend(depth + 1))
                return true;
            used_[x] = 0;
            image_[p] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<int> host_deg_;
    Embedding image_;
    std::vector<char> used_;
};

} // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& h)
{
    return InducedSearch(g, h).run();
}

bool contains_induced(const Graph& g, const Graph& h) { return find_induced(g, h).has_value(); }

bool FreenessReport::free() const
{
    return std::none_of(patterns.begin(), patterns.end(), [](const PatternResult& r) { return r.contained; });
}

FreenessReport is_h_free(const Graph& g, const std::vector<NamedPattern>& patterns)
{
    FreenessReport report;
    for (const auto& p : patterns) {
        PatternResult r;
        r.name = p.name;
        r.witness = find_induced(g, p.graph);
        r.contained = r.witness.has_value();
        report.patterns.push_back(std::move(r));
    }
    return report;
}

bool is_linear_forest(const Graph& h)
{
    for (Vertex v = 0; v < h.order(); ++v) {
        if (h.degree(v) > 2)
            return false;
    }
    // max degree <= 2: a component is a path iff it has one edge fewer than vertices
    for (const auto& comp : connected_components(h)) {
        std::size_t twice_edges = 0;
        for (Vertex v : comp)
            twice_edges += h.degree(v);
        if (twice_edges / 2 + 1 != comp.size())
            return false;
    }
    return true;
}

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

Graph single_term(std::string_view term)
{
    const std::string t = lower(term);
    if (t == "claw" || t == "k13" || t == "k1,3" || t == "k_{1,3}")
        return star_graph(3);
    if (t == "paw") {
        GraphBuilder b(4);
        b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2).add_edge(2, 3);
        return std::move(b).build();
    }
    if (t.size() >= 2 && (t[0] == 'p' || t[0] == 'c' || t[0] == 'k') &&
        std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const int r = std::stoi(t.substr(1));
        switch (t[0]) {
        case 'p':
            return path_graph(r);
        case 'c':
            return cycle_graph(r);
        default:
            return complete_graph(r);
        }
    }
    throw ArgumentError("unknown pattern name `" + std::string(term) + "`");
}

} // namespace

Graph named_pattern(std::string_view name)
{
    const std::string n = lower(name);
    if (n.rfind("co-", 0) == 0)
        return complement(named_pattern(name.substr(3)));
    Graph out(0);
    std::size_t start = 0;
    while (start <= name.size()) {
        const std::size_t plus = name.find('+', start);
        std::string_view term = name.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
            ++digits;
        const int copies = digits == 0 ? 1 : std::stoi(std::string(term.substr(0, digits)));
        const Graph piece = single_term(term.substr(digits));
        for (int i = 0; i < copies; ++i)
            out = disjoint_union(out, piece);
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return out;
}

HClassification classify_h(const Graph& h)
{
    if (h.empty())
        throw ArgumentError("classify_h: pattern graph has no vertices");
    if (contains_induced(path_graph(4), h))
        return {Verdict::PolyTime, ClassificationRule::SubP4};
    if (contains_induced(named_pattern("P1+P3"), h))
        return {Verdict::PolyTime, ClassificationRule::SubP1P3};
    if (!is_linear_forest(h))
        return {Verdict::NPHard, ClassificationRule::ContainsClawOrCycle};
    return {Verdict::CoNPHard, ClassificationRule::LinearForestHard};
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::PolyTime:
        return "PolyTime";
    case Verdict::NPHard:
        return "NPHard";
    case Verdict::CoNPHard:
        return "CoNPHard";
    }
    return "?";
}

std::string_view to_string(ClassificationRule r)
{
    switch (r) {
    case ClassificationRule::SubP4:
        return "SubP4";
    case ClassificationRule::SubP1P3:
        return "SubP1P3";
    case ClassificationRule::ContainsClawOrCycle:
        return "ContainsClawOrCycle";
    case ClassificationRule::LinearForestHard:
        return "LinearForestHard";
    }
    return "?";
}

} // namespace critcol
