#pragma once

#include "ocd/graph.hpp"
#include "ocd/search.hpp"

#include <cstdint>
#include <optional>

namespace ocd {

struct SolveResult {
    int value = 0;
    VertexSet witness;
    // Candidate sets tested; varies with the thread count.
    std::uint64_t examined = 0;
};

bool is_dominating(const Graph& g, const VertexSet& s);

// Dominating, and the complement of s induces a connected subgraph.
bool is_ocd(const Graph& g, const VertexSet& s);

// Outer-connected domination number with the numerically least minimum witness
// (vertex 0 is the least significant bit).
SolveResult gamma_tilde(const Graph& g, const SearchOptions& opts = {});

// Ordinary domination number, same enumeration contract.
SolveResult gamma_plain(const Graph& g, const SearchOptions& opts = {});

// Least OCD set of size <= limit, or nullopt if gamma_tilde(g) > limit.
// `examined` accumulates the number of candidates tested.
std::optional<VertexSet> find_ocd_at_most(const Graph& g, int limit, const SearchOptions& opts,
                                          std::uint64_t* examined = nullptr);

} // namespace ocd
