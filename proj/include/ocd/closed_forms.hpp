#pragma once

#include "ocd/graph.hpp"

namespace ocd {

// Closed-form outer-connected bondage numbers of the standard families.
int b_ocd_complete(int n);  // 1 if n == 3, else ceil(n/2); n >= 3
int b_ocd_cycle(int n);     // 1 if n == 3, else ceil(n/3); n >= 3
int b_ocd_path(int n);      // 1, 2 for n = 2, 3, else ceil(n/3) - 1; n >= 2

// gamma_tilde of P_n / C_n: n - 2 from order 4 on, plus the small orders.
int gamma_tilde_path_cycle(Family family, int n);

// Every component is a star K_{1,k} with k >= 1. Isolated vertices disqualify.
bool is_galaxy(const Graph& g);

// |E(g)| for a galaxy of order >= 4; InputError otherwise.
int galaxy_bondage(const Graph& g);

inline constexpr int kLemmaMaxOrder = 8;

inline int lemma_budget(int n) { return (n + 2) / 2 - 1; }  // ceil((n+1)/2) - 1

// Whether K_n stays connected after removing every possible set of `budget` edges.
// Exhaustive; n is capped at kLemmaMaxOrder (CapExceeded above it).
bool check_complete_minus_edges_connected(int n, int budget);
inline bool check_complete_minus_edges_connected(int n) {
    return check_complete_minus_edges_connected(n, lemma_budget(n));
}

} // namespace ocd
