#include "ocd/instances.hpp"

#include "ocd/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ocd {

namespace {

Clause random_clause(const std::vector<int>& vars, std::mt19937_64& rng) {
    std::bernoulli_distribution sign(0.5);
    Clause c;
    for (int i = 0; i < 3; ++i) c[i] = Literal{vars[i], sign(rng)};
    return c;
}

} // namespace

CnfFormula random_3cnf(int num_vars, int num_clauses, std::mt19937_64& rng) {
    if (num_vars < 3) throw InputError("3-CNF needs at least three variables");
    CnfFormula f;
    f.num_vars = num_vars;
    std::vector<int> vars(num_vars);
    std::iota(vars.begin(), vars.end(), 1);
    for (int j = 0; j < num_clauses; ++j) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<int> pick(vars.begin(), vars.begin() + 3);
        std::sort(pick.begin(), pick.end());
        f.clauses.push_back(random_clause(pick, rng));
    }
    return f;
}

CnfFormula saturated_unsat_3cnf(int num_vars, int extra, std::mt19937_64& rng) {
    if (num_vars < 3) throw InputError("3-CNF needs at least three variables");
    std::vector<int> vars(num_vars);
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<int> core(vars.begin(), vars.begin() + 3);
    std::sort(core.begin(), core.end());

    CnfFormula f = random_3cnf(num_vars, extra, rng);
    for (int pattern = 0; pattern < 8; ++pattern) {
        Clause c;
        for (int i = 0; i < 3; ++i) c[i] = Literal{core[i], ((pattern >> i) & 1) != 0};
        f.clauses.push_back(c);
    }
    std::shuffle(f.clauses.begin(), f.clauses.end(), rng);
    return f;
}

CnfFormula worked_example_formula() {
    return parse_dimacs_cnf("p cnf 5 4\n-1 -2 3 0\n1 3 5 0\n-3 -4 5 0\n-1 -3 4 0\n");
}

Graph random_galaxy(int min_order, int max_order, std::mt19937_64& rng) {
    if (min_order < 2 || max_order < min_order) throw InputError("bad galaxy order range");
    std::uniform_int_distribution<int> total_dist(min_order, max_order);
    int remaining = total_dist(rng);
    std::vector<int> stars;
    while (remaining > 0) {
        std::uniform_int_distribution<int> star_dist(2, remaining);
        int k = star_dist(rng);
        // Never leave a single vertex behind.
        if (remaining - k == 1) k = remaining;
        stars.push_back(k);
        remaining -= k;
    }
    return generate_galaxy(stars);
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return make_graph(n, edges);
}

Graph random_connected_graph(int n, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, 0.5, rng);
        if (is_connected(g)) return g;
    }
}

} // namespace ocd
