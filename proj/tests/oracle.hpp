#pragma once

// Naive reference implementations used only by the tests. They work on plain
// adjacency matrices and share no code with the library's search kernels.

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(int n, const std::vector<std::pair<int, int>>& edges) {
    Matrix a(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
    return a;
}

// Connectivity of the subgraph induced by `keep` via Warshall's transitive closure.
inline bool connected_by_closure(const Matrix& a, const std::vector<bool>& keep) {
    const int n = static_cast<int>(a.size());
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (keep[v]) ids.push_back(v);
    const int k = static_cast<int>(ids.size());
    if (k <= 1) return true;
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) {
        reach[i][i] = true;
        for (int j = 0; j < k; ++j)
            if (a[ids[i]][ids[j]]) reach[i][j] = true;
    }
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (reach[i][m] && reach[m][j]) reach[i][j] = true;
    for (int j = 0; j < k; ++j)
        if (!reach[0][j]) return false;
    return true;
}

inline bool connected_by_bfs(const Matrix& a, const std::vector<bool>& keep) {
    const int n = static_cast<int>(a.size());
    int start = -1;
    int count = 0;
    for (int v = 0; v < n; ++v) {
        if (keep[v]) {
            ++count;
            if (start < 0) start = v;
        }
    }
    if (count <= 1) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w = 0; w < n; ++w) {
            if (keep[w] && a[u][w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == count;
}

inline bool dominating(const Matrix& a, std::uint64_t set) {
    const int n = static_cast<int>(a.size());
    for (int v = 0; v < n; ++v) {
        if (set >> v & 1u) continue;
        bool covered = false;
        for (int u = 0; u < n && !covered; ++u) covered = (set >> u & 1u) && a[u][v];
        if (!covered) return false;
    }
    return true;
}

inline bool outer_connected_dominating(const Matrix& a, std::uint64_t set) {
    const int n = static_cast<int>(a.size());
    if (!dominating(a, set)) return false;
    std::vector<bool> rest(n);
    for (int v = 0; v < n; ++v) rest[v] = !(set >> v & 1u);
    return connected_by_bfs(a, rest);
}

struct Best {
    int value = 0;
    std::uint64_t witness = 0;
};

// Minimum size over all 2^n subsets; ties go to the numerically least mask.
inline Best minimum(const Matrix& a, bool outer_connected) {
    const int n = static_cast<int>(a.size());
    Best best{n + 1, 0};
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int size = __builtin_popcountll(s);
        if (size >= best.value) continue;
        if (outer_connected ? outer_connected_dominating(a, s) : dominating(a, s)) best = {size, s};
    }
    return best;
}

inline int gamma_tilde(const Matrix& a) { return minimum(a, true).value; }

// Every k-subset of `items`, in lexicographic order of index tuples.
template <class F>
void for_each_subset(int count, int k, F&& f) {
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == k) {
            f(idx);
            return;
        }
        for (int i = from; i < count; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

// Whether some k-subset of `pool` (all removed or all added) moves gamma_tilde strictly
// in the given direction.
inline bool some_subset_changes(const Matrix& a, const std::vector<std::pair<int, int>>& pool, int k,
                                bool removal) {
    const int base = gamma_tilde(a);
    bool found = false;
    for_each_subset(static_cast<int>(pool.size()), k, [&](const std::vector<int>& idx) {
        if (found) return;
        Matrix b = a;
        for (int i : idx) {
            auto [u, v] = pool[i];
            b[u][v] = b[v][u] = !removal;
        }
        int after = gamma_tilde(b);
        found = removal ? after > base : after < base;
    });
    return found;
}

} // namespace oracle
