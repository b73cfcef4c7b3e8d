#include "critcol/chromatic.hpp"
#include "critcol/error.hpp"

#include <functional>

namespace critcol {

// Deliberately naive and independent of the exact solver: enumerate every
// assignment with at most k colors as a restricted-growth string (vertex i
// uses a color at most one above the largest seen so far, which skips color
// permutations) and test each complete assignment against the full edge list.
int chi_bruteforce(const Graph& g)
{
    const int n = g.order();
    if (n > 10)
        throw ResourceError("chi_bruteforce supports at most 10 vertices, got " + std::to_string(n));
    if (n == 0)
        return 0;
    const std::vector<Edge> edges = g.edges();
    std::vector<int> assignment(n, 0);

    auto proper = [&] {
        for (const Edge& e : edges) {
            if (assignment[e.u] == assignment[e.v])
                return false;
        }
        return true;
    };
    std::function<bool(int, int, int)> search = [&](int i, int used, int k) {
        if (i == n)
            return proper();
        for (int c = 0; c < std::min(used + 1, k); ++c) {
            assignment[i] = c;
            if (search(i + 1, std::max(used, c + 1), k))
                return true;
        }
        return false;
    };
    for (int k = 1;; ++k) {
        if (search(0, 0, k))
            return k;
    }
}

} // namespace critcol
