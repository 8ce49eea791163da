#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ocd {

using Mask = std::uint64_t;

// Hard limit of the bit-row representation: one 64-bit word per adjacency row.
inline constexpr int kMaxOrder = 64;

inline constexpr Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline constexpr Mask bit(int v) { return Mask{1} << v; }

// Unordered pair of distinct vertices, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    // Normalizes the endpoint order; throws InputError on a self-loop.
    static Edge make(int a, int b);

    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;

    std::string to_string() const;
};

// Subset of the vertex ids 0..order-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int order, Mask bits = 0);
    static VertexSet from_ids(int order, std::span<const int> ids);
    static VertexSet all(int order) { return VertexSet(order, full_mask(order)); }

    int order() const noexcept { return order_; }
    Mask bits() const noexcept { return bits_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(int v) const noexcept { return v >= 0 && v < order_ && (bits_ >> v & 1u); }

    VertexSet with(int v) const;
    VertexSet complement() const { return VertexSet(order_, ~bits_ & full_mask(order_)); }

    // Members in ascending order.
    std::vector<int> ids() const;

    bool operator==(const VertexSet&) const = default;

private:
    int order_ = 0;
    Mask bits_ = 0;
};

// Undirected simple graph with one neighbor bitset per vertex. Immutable once built.
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int size() const noexcept { return size_; }

    Mask neighbors(int v) const { return rows_[v]; }
    Mask closed_neighbors(int v) const { return rows_[v] | bit(v); }
    int degree(int v) const { return std::popcount(rows_[v]); }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    Mask all() const noexcept { return full_mask(order()); }
    Mask isolated() const;
    Mask leaves() const;

    // Edges sorted lexicographically by (u, v).
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend Graph make_graph(int order, std::span<const Edge> edges);
    friend Graph remove_edges(const Graph& g, std::span<const Edge> removed);
    friend Graph add_edges(const Graph& g, std::span<const Edge> added);
    friend Graph induced_subgraph(const Graph& g, const VertexSet& s);

    std::vector<Mask> rows_;
    int size_ = 0;
};

Graph make_graph(int order, std::span<const Edge> edges);
inline Graph make_graph(int order, std::initializer_list<Edge> edges) {
    return make_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

// Pure edge deletion. Every edge must be present and listed once.
Graph remove_edges(const Graph& g, std::span<const Edge> removed);
// Pure edge insertion. Every edge must be absent and listed once.
Graph add_edges(const Graph& g, std::span<const Edge> added);

// Subgraph on the members of s, re-indexed in ascending original id.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// The empty graph and single vertices count as connected.
bool is_connected(const Graph& g);

// Whether the subgraph induced by `within` is connected, without materializing it.
bool is_connected_within(const Graph& g, Mask within);

// Non-adjacent pairs of distinct vertices, sorted lexicographically.
std::vector<Edge> complement_non_edges(const Graph& g);

enum class Family { complete, cycle, path, star };

Family parse_family(const std::string& name);
std::string to_string(Family f);

Graph generate_family(Family family, int n);

// Disjoint union of stars; star ids are laid out consecutively, center first.
Graph generate_galaxy(std::span<const int> star_orders);

} // namespace ocd
