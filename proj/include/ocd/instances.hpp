#pragma once

#include "ocd/cnf.hpp"
#include "ocd/graph.hpp"

#include <random>

namespace ocd {

// Random 3-CNF: every clause draws three distinct variables and independent signs.
CnfFormula random_3cnf(int num_vars, int num_clauses, std::mt19937_64& rng);

// Unsatisfiable 3-CNF: all eight sign patterns over three randomly chosen variables,
// `extra` further random clauses, in shuffled order.
CnfFormula saturated_unsat_3cnf(int num_vars, int extra, std::mt19937_64& rng);

// The 5-variable, 4-clause worked instance used throughout the reduction tests:
// (~u1 | ~u2 | u3) & (u1 | u3 | u5) & (~u3 | ~u4 | u5) & (~u1 | ~u3 | u4).
CnfFormula worked_example_formula();

// Random galaxy with total order in [min_order, max_order].
Graph random_galaxy(int min_order, int max_order, std::mt19937_64& rng);

// Uniform G(n, 1/2) resampled until connected.
Graph random_connected_graph(int n, std::mt19937_64& rng);

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

} // namespace ocd
