#include "ocd/graph.hpp"

#include "ocd/errors.hpp"

#include <algorithm>

namespace ocd {

Edge Edge::make(int a, int b) {
    if (a == b) {
        throw InputError("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string Edge::to_string() const {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

VertexSet::VertexSet(int order, Mask bits) : order_(order), bits_(bits) {
    if (order < 0 || order > kMaxOrder) {
        throw InputError("vertex set order " + std::to_string(order) + " out of range");
    }
    if ((bits & ~full_mask(order)) != 0) {
        throw InputError("vertex set member outside 0.." + std::to_string(order - 1));
    }
}

VertexSet VertexSet::from_ids(int order, std::span<const int> ids) {
    Mask m = 0;
    for (int v : ids) {
        if (v < 0 || v >= order) {
            throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order - 1));
        }
        m |= bit(v);
    }
    return VertexSet(order, m);
}

VertexSet VertexSet::with(int v) const {
    return VertexSet(order_, bits_ | bit(v));
}

std::vector<int> VertexSet::ids() const {
    std::vector<int> out;
    out.reserve(size());
    for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

Mask Graph::isolated() const {
    Mask m = 0;
    for (int v = 0; v < order(); ++v) {
        if (rows_[v] == 0) m |= bit(v);
    }
    return m;
}

Mask Graph::leaves() const {
    Mask m = 0;
    for (int v = 0; v < order(); ++v) {
        if (std::has_single_bit(rows_[v])) m |= bit(v);
    }
    return m;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (int u = 0; u < order(); ++u) {
        for (Mask m = rows_[u] & ~full_mask(u + 1); m; m &= m - 1) {
            out.push_back(Edge{u, std::countr_zero(m)});
        }
    }
    return out;
}

namespace {

void check_endpoints(int order, int a, int b) {
    if (a < 0 || b < 0 || a >= order || b >= order) {
        throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                         "} has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (a == b) {
        throw InputError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} is a self-loop");
    }
}

} // namespace

Graph make_graph(int order, std::span<const Edge> edges) {
    if (order < 0 || order > kMaxOrder) {
        throw InputError("graph order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxOrder));
    }
    Graph g;
    g.rows_.assign(order, 0);
    for (const Edge& raw : edges) {
        check_endpoints(order, raw.u, raw.v);
        Edge e = Edge::make(raw.u, raw.v);
        if (g.rows_[e.u] >> e.v & 1u) {
            throw InputError("duplicate edge " + e.to_string());
        }
        g.rows_[e.u] |= bit(e.v);
        g.rows_[e.v] |= bit(e.u);
        ++g.size_;
    }
    return g;
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
    Graph h = g;
    for (const Edge& raw : removed) {
        check_endpoints(g.order(), raw.u, raw.v);
        Edge e = Edge::make(raw.u, raw.v);
        if (!(h.rows_[e.u] >> e.v & 1u)) {
            throw InputError("edge " + e.to_string() + (g.has_edge(e) ? " listed twice" : " not present"));
        }
        h.rows_[e.u] &= ~bit(e.v);
        h.rows_[e.v] &= ~bit(e.u);
        --h.size_;
    }
    return h;
}

Graph add_edges(const Graph& g, std::span<const Edge> added) {
    Graph h = g;
    for (const Edge& raw : added) {
        check_endpoints(g.order(), raw.u, raw.v);
        Edge e = Edge::make(raw.u, raw.v);
        if (h.rows_[e.u] >> e.v & 1u) {
            throw InputError("edge " + e.to_string() + (g.has_edge(e) ? " already present" : " listed twice"));
        }
        h.rows_[e.u] |= bit(e.v);
        h.rows_[e.v] |= bit(e.u);
        ++h.size_;
    }
    return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.order() != g.order()) {
        throw InputError("vertex set order " + std::to_string(s.order()) + " does not match graph order " +
                         std::to_string(g.order()));
    }
    std::vector<int> ids = s.ids();
    Graph h;
    h.rows_.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (g.adjacent(ids[i], ids[j])) {
                h.rows_[i] |= bit(static_cast<int>(j));
                h.rows_[j] |= bit(static_cast<int>(i));
                ++h.size_;
            }
        }
    }
    return h;
}

bool is_connected_within(const Graph& g, Mask within) {
    if (std::popcount(within) <= 1) return true;
    Mask reached = within & -within;
    Mask frontier = reached;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
        frontier = next & within & ~reached;
        reached |= frontier;
    }
    return reached == within;
}

bool is_connected(const Graph& g) {
    return is_connected_within(g, g.all());
}

std::vector<Edge> complement_non_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) out.push_back(Edge{u, v});
        }
    }
    return out;
}

Family parse_family(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "star") return Family::star;
    throw InputError("unknown graph family '" + name + "'");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::star: return "star";
    }
    return "?";
}

Graph generate_family(Family family, int n) {
    int minimum = 1;
    switch (family) {
        case Family::complete:
        case Family::cycle: minimum = 3; break;
        case Family::path: minimum = 1; break;
        case Family::star: minimum = 2; break;
    }
    if (n < minimum) {
        throw InputError(to_string(family) + " graph needs order >= " + std::to_string(minimum) + ", got " +
                         std::to_string(n));
    }
    std::vector<Edge> edges;
    switch (family) {
        case Family::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            break;
        case Family::cycle:
            for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
            edges.push_back({0, n - 1});
            break;
        case Family::path:
            for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
            break;
        case Family::star:
            for (int v = 1; v < n; ++v) edges.push_back({0, v});
            break;
    }
    return make_graph(n, edges);
}

Graph generate_galaxy(std::span<const int> star_orders) {
    std::vector<Edge> edges;
    int base = 0;
    for (int k : star_orders) {
        if (k < 2) {
            throw InputError("galaxy component of order " + std::to_string(k) + " (stars need order >= 2)");
        }
        for (int leaf = 1; leaf < k; ++leaf) edges.push_back({base, base + leaf});
        base += k;
    }
    return make_graph(base, edges);
}

} // namespace ocd
