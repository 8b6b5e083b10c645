#ifndef BGCTP_ARBORESCENCE_HPP
#define BGCTP_ARBORESCENCE_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "bgctp/dijkstra.hpp"
#include "bgctp/graph.hpp"

namespace bgctp {
namespace detail {

struct DiEdge {
    int from = 0;
    int to = 0;
    Cost w = 0;
    int id = 0; // caller-defined payload carried through contractions
};

/// Chu-Liu/Edmonds minimum-weight arborescence rooted at `root` over
/// vertices 1..n. Ties broken by (w, id). Returns the payload ids of the
/// chosen edges, or nullopt when some vertex is unreachable.
inline std::optional<std::vector<int>> min_arborescence(int n, int root, const std::vector<DiEdge>& edges) {
    if (n == 1) return std::vector<int>{};

    // best incoming edge per vertex
    std::vector<int> best(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const DiEdge& e = edges[static_cast<std::size_t>(i)];
        if (e.to == root || e.from == e.to) continue;
        int& b = best[static_cast<std::size_t>(e.to)];
        if (b < 0 || std::pair(e.w, e.id) < std::pair(edges[static_cast<std::size_t>(b)].w,
                                                      edges[static_cast<std::size_t>(b)].id))
            b = i;
    }
    for (int v = 1; v <= n; ++v)
        if (v != root && best[static_cast<std::size_t>(v)] < 0) return std::nullopt;

    // cycles of the functional graph v -> from(best[v])
    std::vector<int> comp(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> mark(static_cast<std::size_t>(n) + 1, 0);
    int ncomp = 0;
    mark[static_cast<std::size_t>(root)] = -1;
    for (int v = 1; v <= n; ++v) {
        if (mark[static_cast<std::size_t>(v)] != 0) continue;
        int x = v;
        while (mark[static_cast<std::size_t>(x)] == 0) {
            mark[static_cast<std::size_t>(x)] = v;
            x = edges[static_cast<std::size_t>(best[static_cast<std::size_t>(x)])].from;
        }
        if (mark[static_cast<std::size_t>(x)] == v && x != root) {
            // new cycle through x
            ++ncomp;
            int y = x;
            do {
                comp[static_cast<std::size_t>(y)] = ncomp;
                y = edges[static_cast<std::size_t>(best[static_cast<std::size_t>(y)])].from;
            } while (y != x);
        }
    }
    if (ncomp == 0) {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n) - 1);
        for (int v = 1; v <= n; ++v)
            if (v != root) out.push_back(edges[static_cast<std::size_t>(best[static_cast<std::size_t>(v)])].id);
        return out;
    }

    const int ncycles = ncomp;
    for (int v = 1; v <= n; ++v)
        if (comp[static_cast<std::size_t>(v)] == 0) comp[static_cast<std::size_t>(v)] = ++ncomp;

    // contract: edges between components, weights of edges entering a cycle
    // reduced by the weight of the in-cycle selection they would replace
    std::vector<DiEdge> contracted;
    std::vector<int> level_index; // contracted edge -> index into `edges`
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const DiEdge& e = edges[static_cast<std::size_t>(i)];
        const int cu = comp[static_cast<std::size_t>(e.from)];
        const int cv = comp[static_cast<std::size_t>(e.to)];
        if (cu == cv) continue;
        Cost w = e.w;
        if (comp[static_cast<std::size_t>(e.to)] <= ncycles)
            w -= edges[static_cast<std::size_t>(best[static_cast<std::size_t>(e.to)])].w;
        contracted.push_back({cu, cv, w, static_cast<int>(level_index.size())});
        level_index.push_back(i);
    }

    auto sub = min_arborescence(ncomp, comp[static_cast<std::size_t>(root)], contracted);
    if (!sub) return std::nullopt;

    std::vector<int> entered_target(static_cast<std::size_t>(ncycles) + 1, 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - 1);
    for (int meta : *sub) {
        const DiEdge& e = edges[static_cast<std::size_t>(level_index[static_cast<std::size_t>(meta)])];
        out.push_back(e.id);
        const int c = comp[static_cast<std::size_t>(e.to)];
        if (c <= ncycles) entered_target[static_cast<std::size_t>(c)] = e.to;
    }
    // open each cycle at the vertex its external edge enters
    for (int v = 1; v <= n; ++v) {
        const int c = comp[static_cast<std::size_t>(v)];
        if (c <= ncycles && entered_target[static_cast<std::size_t>(c)] != v)
            out.push_back(edges[static_cast<std::size_t>(best[static_cast<std::size_t>(v)])].id);
    }
    return out;
}

} // namespace detail

/// Lexicographic optimum (min c_gamma, then min c_tau): a shortest-path tree
/// of minimum trench cost. With positive cable costs the tight-edge digraph
/// is acyclic and each vertex independently takes its cheapest tight in-edge;
/// zero-cost edges route through a general minimum arborescence.
inline std::pair<Tree, ObjectivePoint> lexmin_gamma_tau(const Graph& g) {
    const ShortestPaths sp = dijkstra_sssp(g);
    const bool zero_cable =
        std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.cable == 0; });

    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(g.n()) - 1);
    if (!zero_cable) {
        for (int v = 1; v <= g.n(); ++v) {
            if (v == g.root()) continue;
            int pick = -1;
            for (int id : g.incident(v)) {
                const bool into_v = (g.edge(id).v == v) ? sp.tight_uv[static_cast<std::size_t>(id)]
                                                        : sp.tight_vu[static_cast<std::size_t>(id)];
                if (!into_v) continue;
                if (pick < 0 || std::pair(g.edge(id).trench, id) < std::pair(g.edge(pick).trench, pick))
                    pick = id;
            }
            chosen.push_back(pick); // every vertex has a tight in-edge on its shortest path
        }
    } else {
        std::vector<detail::DiEdge> dedges;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (sp.tight_uv[static_cast<std::size_t>(id)]) dedges.push_back({e.u, e.v, e.trench, id});
            if (sp.tight_vu[static_cast<std::size_t>(id)]) dedges.push_back({e.v, e.u, e.trench, id});
        }
        auto ids = detail::min_arborescence(g.n(), g.root(), dedges);
        chosen = std::move(*ids); // connected graph: an SPT always exists
    }

    Tree t = tree_from_edges(g, chosen);
    ObjectivePoint p = eval_tree(g, t);
    if (p.gamma != sp.total) throw std::logic_error("lexmin_gamma_tau: result is not a shortest-path tree");
    return {std::move(t), p};
}

} // namespace bgctp

#endif // BGCTP_ARBORESCENCE_HPP
