#ifndef BGCTP_TEST_UTIL_HPP
#define BGCTP_TEST_UTIL_HPP

#include <algorithm>
#include <vector>

#include "bgctp/bgctp.hpp"

namespace testutil {

using namespace bgctp;

// The four-vertex cycle fixture with root S=1: trees T1..T3 map to points
// (26,21), (29,19), (31,15).
inline Graph example1() {
    return validate_graph({{1, 2, 5, 5}, {1, 4, 10, 10}, {2, 3, 6, 6}, {3, 4, 4, 4}}, 4, 1);
}

inline int find_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    for (int id = 0; id < g.edge_count(); ++id)
        if (g.edge(id).u == u && g.edge(id).v == v) return id;
    return -1;
}

inline std::vector<int> edge_ids(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<int> ids;
    for (auto [u, v] : pairs) ids.push_back(find_edge(g, u, v));
    return ids;
}

// Independent SSSP oracle: enumerate every simple path by DFS. Only for
// small graphs.
inline std::vector<Cost> brute_force_sssp(const Graph& g) {
    const int n = g.n();
    std::vector<Cost> best(n + 1, kUnreachable);
    best[g.root()] = 0;
    std::vector<char> used(n + 1, 0);

    auto dfs = [&](auto&& self, int v, Cost acc) -> void {
        if (acc < best[v]) best[v] = acc;
        used[v] = 1;
        for (int id : g.incident(v)) {
            const int w = g.other_end(id, v);
            if (used[w]) continue;
            self(self, w, acc + g.edge(id).cable);
        }
        used[v] = 0;
    };
    dfs(dfs, g.root(), 0);
    return best;
}

// Matrix-tree count via fraction-free (Bareiss) elimination of the
// Laplacian minor.
inline long long kirchhoff_tree_count(const Graph& g) {
    const int n = g.n();
    const int k = n - 1; // drop the row/column of vertex n
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k, 0));
    for (const Edge& e : g.edges()) {
        const int u = e.u - 1, v = e.v - 1;
        if (u < k) a[u][u] += 1;
        if (v < k) a[v][v] += 1;
        if (u < k && v < k) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    __int128 prev = 1;
    int sign = 1;
    for (int i = 0; i < k; ++i) {
        int pivot = -1;
        for (int r = i; r < k; ++r)
            if (a[r][i] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != i) {
            std::swap(a[pivot], a[i]);
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r) {
            for (int c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    return static_cast<long long>(sign * a[k - 1][k - 1]);
}

// Pool of small generated instances across all families, both cost modes.
inline std::vector<Graph> small_instance_pool() {
    std::vector<Graph> pool;
    for (int n : {4, 5, 6, 7}) {
        for (std::int64_t seed : {1, 2}) {
            for (CostMode mode : {CostMode::Ctp, CostMode::Gctp}) {
                pool.push_back(gen_complete(n, mode, seed));
                pool.push_back(gen_incomplete(n, 0.8, mode, seed));
                pool.push_back(gen_grid(n, mode, seed));
                pool.push_back(gen_location(n, 0.8, PointDistribution::Uniform, EdgeRule::Random, mode, seed));
                pool.push_back(
                    gen_location(n, 0.8, PointDistribution::Normal, EdgeRule::MinEuclidean, mode, seed));
            }
        }
    }
    pool.push_back(gen_windmill(1));
    pool.push_back(gen_windmill(2));
    pool.push_back(gen_windmill(3));
    pool.push_back(example1());
    return pool;
}

// Same-topology variant with some cable costs zeroed (exercises the
// arborescence fallback). Trench costs untouched.
inline Graph with_zero_cables(const Graph& g, int every) {
    std::vector<Edge> edges = g.edges();
    for (int id = 0; id < static_cast<int>(edges.size()); ++id)
        if (id % every == 0) edges[id].cable = 0;
    return Graph(g.n(), g.root(), std::move(edges));
}

} // namespace testutil

#endif // BGCTP_TEST_UTIL_HPP
