#ifndef BGCTP_DIJKSTRA_HPP
#define BGCTP_DIJKSTRA_HPP

#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "bgctp/graph.hpp"

namespace bgctp {

inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max() / 4;

struct ShortestPaths {
    std::vector<Cost> dist;              // size n+1; kUnreachable where not reached
    std::vector<std::uint8_t> tight_uv;  // per edge id: u -> v lies on some shortest path
    std::vector<std::uint8_t> tight_vu;  // per edge id: v -> u lies on some shortest path
    Cost total = 0;                      // sum of dist over v != root (only if complete)
    bool complete = true;
};

/// Single-source shortest paths from the root over cable costs. When
/// `enabled` is non-empty it masks edges (0 = ignore edge id).
inline ShortestPaths dijkstra_sssp(const Graph& g, std::span<const std::uint8_t> enabled = {}) {
    const int n = g.n();
    ShortestPaths sp;
    sp.dist.assign(n + 1, kUnreachable);
    sp.dist[g.root()] = 0;

    using Item = std::pair<Cost, int>; // (dist, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, g.root());
    std::vector<char> done(n + 1, 0);

    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (int id : g.incident(u)) {
            if (!enabled.empty() && !enabled[static_cast<std::size_t>(id)]) continue;
            const int w = g.other_end(id, u);
            const Cost nd = d + g.edge(id).cable;
            if (nd < sp.dist[w]) {
                sp.dist[w] = nd;
                pq.emplace(nd, w);
            }
        }
    }

    sp.tight_uv.assign(static_cast<std::size_t>(g.edge_count()), 0);
    sp.tight_vu.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (int id = 0; id < g.edge_count(); ++id) {
        if (!enabled.empty() && !enabled[static_cast<std::size_t>(id)]) continue;
        const Edge& e = g.edge(id);
        if (sp.dist[e.u] < kUnreachable && sp.dist[e.u] + e.cable == sp.dist[e.v])
            sp.tight_uv[static_cast<std::size_t>(id)] = 1;
        if (sp.dist[e.v] < kUnreachable && sp.dist[e.v] + e.cable == sp.dist[e.u])
            sp.tight_vu[static_cast<std::size_t>(id)] = 1;
    }

    sp.total = 0;
    for (int v = 1; v <= n; ++v) {
        if (v == g.root()) continue;
        if (sp.dist[v] >= kUnreachable) {
            sp.complete = false;
            sp.total = 0;
            break;
        }
        sp.total += sp.dist[v];
    }
    return sp;
}

} // namespace bgctp

#endif // BGCTP_DIJKSTRA_HPP
