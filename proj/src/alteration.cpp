#include "ocd/alteration.hpp"

#include "ocd/errors.hpp"
#include "ocd/solver.hpp"

#include <algorithm>
#include <atomic>

namespace ocd {

std::string to_string(AlterationKind kind) {
    return kind == AlterationKind::removal ? "removal" : "addition";
}

std::string to_string(AlterationStatus status) {
    switch (status) {
        case AlterationStatus::found: return "ok";
        case AlterationStatus::undefined: return "undefined";
        case AlterationStatus::bound_exceeded: return "bound-exceeded";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kSubsetChunk = 8;

void require_no_isolated(const Graph& g) {
    if (g.order() == 0) throw InputError("graph has no vertices");
    if (Mask iso = g.isolated()) {
        throw InputError("graph has an isolated vertex (" + std::to_string(std::countr_zero(iso)) +
                         "); the alteration numbers are defined only without isolated vertices");
    }
}

// Walks edge subsets of `pool` by size, lexicographically within a size, and stops at the
// first subset whose application changes gamma_tilde in the wanted direction.
AlterationResult search(const Graph& g, const std::vector<Edge>& pool, AlterationKind kind, int base,
                        std::optional<int> k_max, const SearchOptions& opts) {
    AlterationResult out;
    out.kind = kind;
    out.gamma_before = base;
    out.gamma_after = base;

    const int p = static_cast<int>(pool.size());
    const int top = k_max ? std::min(*k_max, p) : p;
    const unsigned threads = resolve_threads(opts);
    std::atomic<std::uint64_t> examined{0};

    auto apply = [&](const std::vector<Edge>& edges) {
        return kind == AlterationKind::removal ? remove_edges(g, edges) : add_edges(g, edges);
    };

    for (int k = 1; k <= top; ++k) {
        const std::uint64_t total = binomial(p, k);
        const bool outer_parallel = threads > 1 && total >= 2 * kSubsetChunk;
        SearchOptions inner = opts;
        inner.threads = outer_parallel ? 1 : threads;

        std::function<std::optional<std::vector<Edge>>(std::uint64_t, std::uint64_t)> scan =
            [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::vector<Edge>> {
            std::vector<int> idx = unrank_lex(begin, p, k);
            std::vector<Edge> edges(k);
            std::uint64_t tested = 0;
            std::optional<std::vector<Edge>> hit;
            for (std::uint64_t r = begin; r < end; ++r) {
                ++tested;
                for (int i = 0; i < k; ++i) edges[i] = pool[idx[i]];
                Graph altered = apply(edges);
                bool success = kind == AlterationKind::removal
                                   ? !find_ocd_at_most(altered, base, inner).has_value()
                                   : find_ocd_at_most(altered, base - 1, inner).has_value();
                if (success) {
                    hit = edges;
                    break;
                }
                next_lex_combination(idx, p);
            }
            examined.fetch_add(tested, std::memory_order_relaxed);
            return hit;
        };

        auto hit = first_hit_in_ranks<std::vector<Edge>>(total, kSubsetChunk, outer_parallel ? threads : 1, scan);
        if (hit) {
            out.status = AlterationStatus::found;
            out.k = k;
            out.witness_edges = *hit;
            out.gamma_after = gamma_tilde(apply(*hit), opts).value;
            out.examined_subsets = examined.load();
            return out;
        }
    }
    out.examined_subsets = examined.load();
    if (k_max && top < p) {
        out.status = AlterationStatus::bound_exceeded;
    } else if (kind == AlterationKind::addition) {
        out.status = AlterationStatus::undefined;
    } else {
        // Removing every edge of an isolate-free graph always raises the value.
        throw std::logic_error("bondage search exhausted all edge subsets");
    }
    return out;
}

} // namespace

AlterationResult bondage_ocd(const Graph& g, std::optional<int> k_max, const SearchOptions& opts) {
    require_no_isolated(g);
    if (g.size() == 0) throw InputError("graph has no edges");
    if (k_max && *k_max < 0) throw InputError("k_max must be non-negative");
    const int base = gamma_tilde(g, opts).value;
    return search(g, g.edges(), AlterationKind::removal, base, k_max, opts);
}

AlterationResult reinforcement_ocd(const Graph& g, std::optional<int> k_max, const SearchOptions& opts) {
    require_no_isolated(g);
    if (k_max && *k_max < 0) throw InputError("k_max must be non-negative");
    const int base = gamma_tilde(g, opts).value;
    if (base == 1) {
        AlterationResult out;
        out.kind = AlterationKind::addition;
        out.status = AlterationStatus::undefined;
        out.gamma_before = out.gamma_after = 1;
        return out;
    }
    return search(g, complement_non_edges(g), AlterationKind::addition, base, k_max, opts);
}

std::vector<std::pair<Edge, int>> gamma_after_each_single_removal(const Graph& g, const SearchOptions& opts) {
    require_no_isolated(g);
    if (g.size() == 0) throw InputError("graph has no edges");
    std::vector<std::pair<Edge, int>> out;
    for (const Edge& e : g.edges()) {
        Edge one[] = {e};
        out.emplace_back(e, gamma_tilde(remove_edges(g, one), opts).value);
    }
    return out;
}

} // namespace ocd
