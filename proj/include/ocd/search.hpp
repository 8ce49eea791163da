#pragma once

#include "ocd/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ocd {

// Knobs shared by the exhaustive solvers.
struct SearchOptions {
    // Largest graph order the exhaustive solvers accept.
    int max_order = 30;
    // Worker count; 0 means default_thread_count().
    unsigned threads = 0;
};

// OCD_THREADS if set to a positive integer, else the hardware concurrency.
unsigned default_thread_count();
unsigned resolve_threads(const SearchOptions& opts);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// k-subset of {0..n-1} with the given rank in colexicographic order, as a bitmask.
// Colex order on subsets coincides with increasing numeric value of the mask.
Mask unrank_colex(std::uint64_t rank, int n, int k);

// Next mask with the same popcount (Gosper's hack). Returns 0 past the end of n bits.
inline Mask next_same_popcount(Mask x, int n) {
    Mask c = x & -x;
    Mask r = x + c;
    if (r == 0) return 0;
    Mask next = (((r ^ x) >> 2) / c) | r;
    return (next & ~full_mask(n)) ? 0 : next;
}

// k-subset of {0..n-1} with the given rank in lexicographic order of sorted index tuples.
std::vector<int> unrank_lex(std::uint64_t rank, int n, int k);

// Advances a sorted index tuple to its lexicographic successor; false past the end.
bool next_lex_combination(std::vector<int>& idx, int n);

// Splits ranks [0, total) into chunks of `chunk` and runs `scan(begin, end)` on them,
// possibly concurrently. `scan` returns the first hit in its chunk (in rank order).
// The returned hit is the one from the lowest chunk that produced a hit, which is
// exactly what a sequential scan would return.
template <class Hit>
std::optional<Hit> first_hit_in_ranks(std::uint64_t total, std::uint64_t chunk, unsigned threads,
                                      const std::function<std::optional<Hit>(std::uint64_t, std::uint64_t)>& scan) {
    if (total == 0) return std::nullopt;
    if (chunk == 0) chunk = 1;
    std::uint64_t chunks = (total + chunk - 1) / chunk;
    if (threads <= 1 || chunks <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            std::uint64_t begin = c * chunk;
            std::uint64_t end = std::min(total, begin + chunk);
            if (auto hit = scan(begin, end)) return hit;
        }
        return std::nullopt;
    }

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best_chunk{chunks};
    std::vector<std::pair<std::uint64_t, Hit>> sparse_found;
    std::mutex found_mutex;

    auto worker = [&] {
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks || c > best_chunk.load()) return;
            std::uint64_t begin = c * chunk;
            std::uint64_t end = std::min(total, begin + chunk);
            auto hit = scan(begin, end);
            if (!hit) continue;
            {
                std::lock_guard lock(found_mutex);
                sparse_found.emplace_back(c, std::move(*hit));
            }
            std::uint64_t cur = best_chunk.load();
            while (c < cur && !best_chunk.compare_exchange_weak(cur, c)) {
            }
        }
    };

    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    pool.clear();

    std::uint64_t winner = best_chunk.load();
    for (auto& [c, hit] : sparse_found) {
        if (c == winner) return std::move(hit);
    }
    return std::nullopt;
}

} // namespace ocd
