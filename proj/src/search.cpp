#include "ocd/search.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace ocd {

unsigned default_thread_count() {
    if (const char* env = std::getenv("OCD_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

unsigned resolve_threads(const SearchOptions& opts) {
    return opts.threads == 0 ? default_thread_count() : opts.threads;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

Mask unrank_colex(std::uint64_t rank, int n, int k) {
    // Largest element first: pick c_k with C(c_k, k) <= rank < C(c_k + 1, k).
    Mask m = 0;
    int hi = n - 1;
    for (int j = k; j >= 1; --j) {
        int c = j - 1;
        while (c + 1 <= hi && binomial(c + 1, j) <= rank) ++c;
        rank -= binomial(c, j);
        m |= bit(c);
        hi = c - 1;
    }
    return m;
}

std::vector<int> unrank_lex(std::uint64_t rank, int n, int k) {
    std::vector<int> idx;
    idx.reserve(k);
    int start = 0;
    for (int j = k; j >= 1; --j) {
        // Count tuples that start with each candidate first element.
        for (int c = start;; ++c) {
            std::uint64_t block = binomial(n - c - 1, j - 1);
            if (rank < block) {
                idx.push_back(c);
                start = c + 1;
                break;
            }
            rank -= block;
        }
    }
    return idx;
}

bool next_lex_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

} // namespace ocd
