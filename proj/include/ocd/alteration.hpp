#pragma once

#include "ocd/graph.hpp"
#include "ocd/search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ocd {

enum class AlterationKind { removal, addition };

enum class AlterationStatus {
    found,           // k and witness_edges are valid
    undefined,       // no edge addition can lower the value (reinforcement only)
    bound_exceeded,  // nothing of size <= k_max works
};

std::string to_string(AlterationKind kind);
std::string to_string(AlterationStatus status);

struct AlterationResult {
    AlterationKind kind = AlterationKind::removal;
    AlterationStatus status = AlterationStatus::found;
    int k = 0;
    std::vector<Edge> witness_edges;
    int gamma_before = 0;
    // Value on the altered graph; equals gamma_before unless status is found.
    int gamma_after = 0;
    std::uint64_t examined_subsets = 0;
};

// Outer-connected bondage number: fewest edge removals that raise gamma_tilde.
// Subsets are searched by size, then lexicographically over the sorted edge list; the
// witness is the first success in that order. Throws InputError if g has an isolated
// vertex or no edges.
AlterationResult bondage_ocd(const Graph& g, std::optional<int> k_max = std::nullopt,
                             const SearchOptions& opts = {});

// Outer-connected reinforcement number: fewest non-edge additions that lower
// gamma_tilde. Undefined when gamma_tilde(g) == 1.
AlterationResult reinforcement_ocd(const Graph& g, std::optional<int> k_max = std::nullopt,
                                   const SearchOptions& opts = {});

// gamma_tilde(g - e) for every edge e, in lexicographic edge order.
std::vector<std::pair<Edge, int>> gamma_after_each_single_removal(const Graph& g, const SearchOptions& opts = {});

} // namespace ocd
