#include "ocd/closed_forms.hpp"

#include "ocd/errors.hpp"
#include "ocd/search.hpp"

namespace ocd {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_order(int n, int minimum, const char* family) {
    if (n < minimum) {
        throw InputError(std::string(family) + " formula needs n >= " + std::to_string(minimum) + ", got " +
                         std::to_string(n));
    }
}

} // namespace

int b_ocd_complete(int n) {
    require_order(n, 3, "complete graph");
    return n == 3 ? 1 : ceil_div(n, 2);
}

int b_ocd_cycle(int n) {
    require_order(n, 3, "cycle");
    return n == 3 ? 1 : ceil_div(n, 3);
}

int b_ocd_path(int n) {
    require_order(n, 2, "path");
    if (n == 2) return 1;
    if (n == 3) return 2;
    return ceil_div(n, 3) - 1;
}

int gamma_tilde_path_cycle(Family family, int n) {
    if (family == Family::cycle) {
        require_order(n, 3, "cycle");
        return n == 3 ? 1 : n - 2;
    }
    if (family == Family::path) {
        require_order(n, 1, "path");
        if (n <= 2) return 1;
        if (n == 3) return 2;
        return n - 2;
    }
    throw InputError("gamma_tilde closed form covers only paths and cycles");
}

bool is_galaxy(const Graph& g) {
    if (g.order() == 0) return false;
    Mask seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (seen & bit(v)) continue;
        // Collect the component of v.
        Mask comp = bit(v);
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        const int order = std::popcount(comp);
        if (order < 2) return false;
        int hubs = 0;
        int degree_sum = 0;
        for (Mask c = comp; c; c &= c - 1) {
            int d = g.degree(std::countr_zero(c));
            degree_sum += d;
            if (d > 1) ++hubs;
        }
        // A connected component is a tree iff it has order - 1 edges.
        if (degree_sum / 2 != order - 1 || hubs > 1) return false;
    }
    return true;
}

int galaxy_bondage(const Graph& g) {
    if (!is_galaxy(g)) throw InputError("graph is not a galaxy");
    if (g.order() < 4) throw InputError("galaxy formula needs order >= 4, got " + std::to_string(g.order()));
    return g.size();
}

bool check_complete_minus_edges_connected(int n, int budget) {
    require_order(n, 3, "complete graph");
    if (n > kLemmaMaxOrder) {
        throw CapExceeded("exhaustive edge-removal scan is capped at order " + std::to_string(kLemmaMaxOrder));
    }
    Graph complete = generate_family(Family::complete, n);
    std::vector<Edge> edges = complete.edges();
    const int p = static_cast<int>(edges.size());
    if (budget < 0 || budget > p) throw InputError("budget outside 0.." + std::to_string(p));
    if (budget == 0) return is_connected(complete);

    std::vector<int> idx = unrank_lex(0, p, budget);
    std::vector<Edge> removed(budget);
    do {
        for (int i = 0; i < budget; ++i) removed[i] = edges[idx[i]];
        if (!is_connected(remove_edges(complete, removed))) return false;
    } while (next_lex_combination(idx, p));
    return true;
}

} // namespace ocd
