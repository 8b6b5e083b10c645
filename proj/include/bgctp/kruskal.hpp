#ifndef BGCTP_KRUSKAL_HPP
#define BGCTP_KRUSKAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "bgctp/graph.hpp"

namespace bgctp {

struct MstResult {
    std::vector<int> edge_ids; // ascending
    Cost trench = 0;
};

/// Edge ids sorted by (trench cost, id) — the deterministic Kruskal order.
inline std::vector<int> edges_by_trench(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(g.edge(a).trench, a) < std::pair(g.edge(b).trench, b);
    });
    return order;
}

/// Minimum-trench spanning tree containing every `forced` edge and none of
/// the edges masked in `forbidden`. `order` is an optional precomputed
/// edges_by_trench(g). Returns nullopt when no such tree exists (forced set
/// cyclic, or the admissible subgraph is disconnected).
inline std::optional<MstResult> kruskal_mst(const Graph& g, std::span<const int> forced,
                                            std::span<const std::uint8_t> forbidden,
                                            std::span<const int> order = {}) {
    detail::DisjointSets dsu(g.n());
    MstResult res;
    res.edge_ids.reserve(static_cast<std::size_t>(g.n() - 1));

    for (int id : forced) {
        const Edge& e = g.edge(id);
        if (!dsu.unite(e.u, e.v)) return std::nullopt; // forced edges close a cycle
        res.edge_ids.push_back(id);
        res.trench += e.trench;
    }

    std::vector<int> local;
    if (order.empty()) {
        local = edges_by_trench(g);
        order = local;
    }
    for (int id : order) {
        if (static_cast<int>(res.edge_ids.size()) == g.n() - 1) break;
        if (!forbidden.empty() && forbidden[static_cast<std::size_t>(id)]) continue;
        const Edge& e = g.edge(id);
        if (!dsu.unite(e.u, e.v)) continue;
        res.edge_ids.push_back(id);
        res.trench += e.trench;
    }
    if (static_cast<int>(res.edge_ids.size()) != g.n() - 1) return std::nullopt;
    std::sort(res.edge_ids.begin(), res.edge_ids.end());
    return res;
}

inline std::optional<MstResult> kruskal_mst(const Graph& g) { return kruskal_mst(g, {}, {}); }

} // namespace bgctp

#endif // BGCTP_KRUSKAL_HPP
