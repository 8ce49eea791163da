#include "ocd/solver.hpp"

#include "ocd/errors.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

namespace ocd {

namespace {

constexpr std::uint64_t kMaskChunk = 1u << 14;

void check_solvable(const Graph& g, const SearchOptions& opts) {
    if (g.order() == 0) throw InputError("graph has no vertices");
    if (g.order() > opts.max_order) {
        throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds solver cap " +
                          std::to_string(opts.max_order));
    }
}

Mask closed_union(const Graph& g, Mask s) {
    Mask out = s;
    for (; s; s &= s - 1) out |= g.neighbors(std::countr_zero(s));
    return out;
}

// Scans candidate sets by increasing size and, within a size, by increasing mask value.
// Vertices in `forced` are contained in every admissible set of the scanned sizes, so only
// supersets of them are enumerated; this never changes which set is found first.
std::optional<VertexSet> least_set(const Graph& g, int limit, bool outer_connected, const SearchOptions& opts,
                                   std::uint64_t* examined_out) {
    check_solvable(g, opts);
    const int n = g.order();
    const Mask all = g.all();
    const Mask isolated = g.isolated();
    const Mask leaves = g.leaves();
    const unsigned threads = resolve_threads(opts);
    std::atomic<std::uint64_t> examined{0};

    std::optional<VertexSet> result;
    for (int s = std::max(1, std::popcount(isolated)); s <= std::min(limit, n) && !result; ++s) {
        // An isolated vertex can only dominate itself. A leaf outside the set is cut off
        // from the rest of the complement, so it can stay out only if it is the whole complement.
        Mask forced = isolated;
        if (outer_connected && s <= n - 2) forced |= leaves;
        const int forced_count = std::popcount(forced);
        if (forced_count > s) continue;

        std::vector<int> free_ids;
        std::vector<Mask> free_closed;
        for (Mask m = all & ~forced; m; m &= m - 1) {
            int v = std::countr_zero(m);
            free_ids.push_back(v);
            free_closed.push_back(g.closed_neighbors(v));
        }
        const int f = static_cast<int>(free_ids.size());
        const int pick = s - forced_count;
        if (pick > f) continue;
        const Mask forced_dom = closed_union(g, forced);

        auto accepts = [&](Mask compressed) -> std::optional<Mask> {
            Mask chosen = forced;
            Mask dom = forced_dom;
            for (Mask c = compressed; c; c &= c - 1) {
                int b = std::countr_zero(c);
                chosen |= bit(free_ids[b]);
                dom |= free_closed[b];
            }
            if (dom != all) return std::nullopt;
            if (outer_connected && !is_connected_within(g, all & ~chosen)) return std::nullopt;
            return chosen;
        };

        if (pick == 0) {
            examined.fetch_add(1, std::memory_order_relaxed);
            if (auto hit = accepts(0)) result = VertexSet(n, *hit);
            continue;
        }

        std::function<std::optional<Mask>(std::uint64_t, std::uint64_t)> scan =
            [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Mask> {
            Mask c = unrank_colex(begin, f, pick);
            std::uint64_t tested = 0;
            std::optional<Mask> hit;
            for (std::uint64_t r = begin; r < end; ++r) {
                ++tested;
                if ((hit = accepts(c))) break;
                c = next_same_popcount(c, f);
            }
            examined.fetch_add(tested, std::memory_order_relaxed);
            return hit;
        };
        if (auto hit = first_hit_in_ranks<Mask>(binomial(f, pick), kMaskChunk, threads, scan)) {
            result = VertexSet(n, *hit);
        }
    }
    if (examined_out) *examined_out += examined.load();
    return result;
}

SolveResult solve(const Graph& g, bool outer_connected, const SearchOptions& opts) {
    SolveResult out;
    auto found = least_set(g, g.order(), outer_connected, opts, &out.examined);
    // The whole vertex set always qualifies, so the scan cannot come back empty.
    out.witness = *found;
    out.value = found->size();
    return out;
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    if (s.order() != g.order()) throw InputError("vertex set does not match graph order");
    return closed_union(g, s.bits()) == g.all();
}

bool is_ocd(const Graph& g, const VertexSet& s) {
    return is_dominating(g, s) && is_connected_within(g, g.all() & ~s.bits());
}

SolveResult gamma_tilde(const Graph& g, const SearchOptions& opts) {
    return solve(g, true, opts);
}

SolveResult gamma_plain(const Graph& g, const SearchOptions& opts) {
    return solve(g, false, opts);
}

std::optional<VertexSet> find_ocd_at_most(const Graph& g, int limit, const SearchOptions& opts,
                                          std::uint64_t* examined) {
    return least_set(g, limit, true, opts, examined);
}

} // namespace ocd
