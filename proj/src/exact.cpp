#include "critcol/chromatic.hpp"
#include "critcol/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace critcol {

namespace {

using Word = Graph::Word;
constexpr int kBits = Graph::kWordBits;

// Small dynamic bitset over the solver's vertex range.
class Bits {
public:
    Bits() = default;
    explicit Bits(int words) : w_(words, 0) {}

    void set(int i) { w_[i / kBits] |= Word{1} << (i % kBits); }
    void reset(int i) { w_[i / kBits] &= ~(Word{1} << (i % kBits)); }
    bool test(int i) const { return (w_[i / kBits] >> (i % kBits)) & 1U; }
    bool any() const
    {
        return std::any_of(w_.begin(), w_.end(), [](Word w) { return w != 0; });
    }
    int count() const
    {
        int c = 0;
        for (Word w : w_)
            c += std::popcount(w);
        return c;
    }
    int first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i])
                return static_cast<int>(i) * kBits + std::countr_zero(w_[i]);
        }
        return -1;
    }
    void and_with(std::span<const Word> row)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= row[i];
    }
    int count_and(std::span<const Word> row) const
    {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & row[i]);
        return c;
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            for (Word w = w_[i]; w != 0; w &= w - 1)
                f(static_cast<int>(i) * kBits + std::countr_zero(w));
        }
    }

private:
    std::vector<Word> w_;
};

void check_cap(const Graph& g, const ExactOptions& opts)
{
    if (g.order() > opts.max_vertices)
        throw ResourceError("exact coloring of " + std::to_string(g.order()) + " vertices exceeds cap " +
                            std::to_string(opts.max_vertices) + " (raise ExactOptions::max_vertices)");
}

// Maximum clique by branch and bound with a greedy-coloring bound.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<Vertex> run()
    {
        Bits cand(g_.words());
        for (Vertex v = 0; v < g_.order(); ++v)
            cand.set(v);
        std::vector<Vertex> current;
        expand(current, cand);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(std::vector<Vertex>& current, Bits cand)
    {
        // Greedy color classes over cand give the bound |current| + colors.
        std::vector<Vertex> order;
        std::vector<int> bound;
        {
            Bits rest = cand;
            int color = 0;
            while (rest.any()) {
                ++color;
                Bits avail = rest;
                while (avail.any()) {
                    const int v = avail.first();
                    avail.reset(v);
                    rest.reset(v);
                    order.push_back(v);
                    bound.push_back(color);
                    // drop neighbours of v from this class
                    auto row = g_.row(v);
                    Bits keep(g_.words());
                    avail.for_each([&](int u) {
                        if (!((row[u / kBits] >> (u % kBits)) & 1U))
                            keep.set(u);
                    });
                    avail = keep;
                }
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size()))
                return;
            const Vertex v = order[i];
            current.push_back(v);
            Bits next = cand;
            next.and_with(g_.row(v));
            if (next.any())
                expand(current, next);
            else if (current.size() > best_.size())
                best_ = current;
            current.pop_back();
            cand.reset(v);
        }
    }

    const Graph& g_;
    std::vector<Vertex> best_;
};

// DSATUR branch and bound. `best_` holds the incumbent color count; the
// search only accepts colorings that use strictly fewer colors.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int incumbent, std::vector<int> incumbent_coloring)
        : g_(g), n_(g.order()), best_(incumbent), best_coloring_(std::move(incumbent_coloring))
    {
        adj_.resize(n_);
        degree_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            adj_[v] = g.neighbors(v);
            degree_[v] = static_cast<int>(adj_[v].size());
        }
        max_colors_ = std::max(best_, 1) + 1;
        conflicts_.assign(static_cast<std::size_t>(n_) * max_colors_, 0);
        sat_.assign(n_, 0);
        color_.assign(n_, 0);
        uncolored_ = Bits(g.words());
        for (Vertex v = 0; v < n_; ++v)
            uncolored_.set(v);
    }

    /// Colors `clique` with 1..|clique| and searches the rest.
    void run(const std::vector<Vertex>& clique)
    {
        lower_ = static_cast<int>(clique.size());
        if (lower_ >= best_)
            return;
        int used = 0;
        for (Vertex v : clique)
            assign(v, ++used);
        search(used, static_cast<int>(clique.size()));
    }

    /// Stop as soon as a coloring with at most `colors` colors is found.
    void accept_at(int colors) { accept_ = colors; }

    int best() const { return best_; }
    const std::vector<int>& best_coloring() const { return best_coloring_; }

private:
    void assign(Vertex v, int c)
    {
        color_[v] = c;
        uncolored_.reset(v);
        for (Vertex u : adj_[v]) {
            if (conflicts_[idx(u, c)]++ == 0)
                ++sat_[u];
        }
    }

    void unassign(Vertex v)
    {
        const int c = color_[v];
        for (Vertex u : adj_[v]) {
            if (--conflicts_[idx(u, c)] == 0)
                --sat_[u];
        }
        color_[v] = 0;
        uncolored_.set(v);
    }

    std::size_t idx(Vertex v, int c) const { return static_cast<std::size_t>(v) * max_colors_ + c; }

    // Vertices that fit no existing class each need a fresh color, and a
    // clique among them needs that many distinct fresh colors.
    int fresh_color_bound(int used) const
    {
        Bits blocked(g_.words());
        uncolored_.for_each([&](int u) {
            if (sat_[u] == used)
                blocked.set(u);
        });
        int size = 0;
        while (blocked.any()) {
            int pick = -1;
            int pick_deg = -1;
            blocked.for_each([&](int u) {
                const int d = blocked.count_and(g_.row(u));
                if (d > pick_deg) {
                    pick = u;
                    pick_deg = d;
                }
            });
            ++size;
            blocked.and_with(g_.row(pick));
        }
        return used + size;
    }

    Vertex select() const
    {
        Vertex pick = -1;
        uncolored_.for_each([&](int v) {
            if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && degree_[v] > degree_[pick]))
                pick = v;
        });
        return pick;
    }

    bool search(int used, int colored)
    {
        if (colored == n_) {
            best_ = used;
            best_coloring_.assign(color_.begin(), color_.end());
            return best_ <= std::max(lower_, accept_);
        }
        if (fresh_color_bound(used) >= best_)
            return false;
        const Vertex v = select();
        for (int c = 1; c <= used && c < best_; ++c) {
            if (conflicts_[idx(v, c)] != 0)
                continue;
            assign(v, c);
            const bool done = search(used, colored + 1);
            unassign(v);
            if (done)
                return true;
        }
        if (used + 1 < best_) {
            assign(v, used + 1);
            const bool done = search(used + 1, colored + 1);
            unassign(v);
            if (done)
                return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int best_;
    std::vector<int> best_coloring_;
    int lower_ = 0;
    int accept_ = 0;
    int max_colors_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> degree_;
    std::vector<int> conflicts_;
    std::vector<int> sat_;
    std::vector<int> color_;
    Bits uncolored_;
};

// Greedy DSATUR, used as the initial incumbent.
std::vector<int> dsatur_greedy(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(n, 0);
    std::vector<std::vector<char>> seen(n);
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] != 0)
                continue;
            if (pick < 0 || sat[v] > sat[pick] || (sat[v] == sat[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 1;
        while (c < static_cast<int>(seen[pick].size()) && seen[pick][c])
            ++c;
        color[pick] = c;
        for (Vertex u : g.neighbors(pick)) {
            if (static_cast<int>(seen[u].size()) <= c)
                seen[u].resize(c + 1, 0);
            if (!seen[u][c]) {
                seen[u][c] = 1;
                ++sat[u];
            }
        }
    }
    return color;
}

int colors_used(const std::vector<int>& coloring)
{
    return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end());
}

} // namespace

std::vector<Vertex> maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

ColoringResult chi_exact(const Graph& g, const ExactOptions& opts)
{
    check_cap(g, opts);
    ColoringResult out;
    out.method = ColoringMethod::Exact;
    if (g.empty())
        return out;

    std::vector<int> greedy = dsatur_greedy(g);
    const int upper = colors_used(greedy);
    ColoringSearch search(g, upper, std::move(greedy));
    search.run(maximum_clique(g));

    out.chi = search.best();
    out.coloring = search.best_coloring();
    if (!is_valid_coloring(g, out.coloring, out.chi))
        throw Error("chi_exact produced an invalid certificate");
    return out;
}

std::optional<std::vector<int>> find_coloring(const Graph& g, int k, const ExactOptions& opts)
{
    check_cap(g, opts);
    if (g.empty())
        return std::vector<int>{};
    if (k <= 0)
        return std::nullopt;

    std::vector<int> greedy = dsatur_greedy(g);
    if (colors_used(greedy) <= k)
        return greedy;
    ColoringSearch search(g, k + 1, {});
    search.accept_at(k);
    search.run(maximum_clique(g));
    if (search.best() > k)
        return std::nullopt;
    return search.best_coloring();
}

} // namespace critcol
