#ifndef BGCTP_ORACLE_HPP
#define BGCTP_ORACLE_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bgctp/frontier.hpp"
#include "bgctp/graph.hpp"

namespace bgctp {

struct EnumerationBudget {
    long long max_trees = 5'000'000;
};

struct EnumerationStats {
    long long trees = 0;
    bool budget_exceeded = false;
};

namespace detail {

template <typename Visitor>
class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g, long long cap, Visitor& visit) : g_(g), cap_(cap), visit_(visit) {}

    EnumerationStats run() {
        DisjointSets dsu(g_.n());
        included_.reserve(static_cast<std::size_t>(g_.n()) - 1);
        recurse(0, dsu, g_.n());
        return stats_;
    }

private:
    // Deletion/contraction in ascending edge-id order, include branch first.
    // `components` tracks the contracted vertex count; 1 means spanning.
    void recurse(int i, DisjointSets& dsu, int components) {
        if (stats_.budget_exceeded) return;
        if (components == 1) {
            if (stats_.trees == cap_) {
                stats_.budget_exceeded = true;
                return;
            }
            ++stats_.trees;
            visit_(std::span<const int>(included_));
            return;
        }
        if (i == g_.edge_count()) return;
        const Edge& e = g_.edge(i);
        if (dsu.find(e.u) == dsu.find(e.v)) {
            recurse(i + 1, dsu, components); // would close a cycle; skip is forced
            return;
        }
        {
            DisjointSets child = dsu;
            child.unite(e.u, e.v);
            included_.push_back(i);
            recurse(i + 1, child, components - 1);
            included_.pop_back();
        }
        if (stats_.budget_exceeded) return;
        if (connected_without(i, dsu, components)) recurse(i + 1, dsu, components);
    }

    // Can the later edges still connect everything once edge i is deleted?
    bool connected_without(int i, const DisjointSets& dsu, int components) const {
        DisjointSets probe = dsu;
        int c = components;
        for (int j = i + 1; j < g_.edge_count(); ++j)
            if (probe.unite(g_.edge(j).u, g_.edge(j).v) && --c == 1) return true;
        return c == 1;
    }

    const Graph& g_;
    long long cap_;
    Visitor& visit_;
    std::vector<int> included_;
    EnumerationStats stats_;
};

} // namespace detail

/// Visits every spanning tree exactly once (edge-id-lexicographic order).
/// The visitor receives the ascending edge ids of each tree. Enumeration
/// stops once `max_trees` trees have been delivered; the stats flag reports
/// whether more exist.
template <typename Visitor>
EnumerationStats enumerate_spanning_trees(const Graph& g, const EnumerationBudget& budget, Visitor&& visit) {
    if (budget.max_trees < 1) raise(Errc::InvalidArgument, "max_trees must be positive");
    detail::TreeEnumerator<Visitor> e(g, budget.max_trees, visit);
    return e.run();
}

/// Exact non-dominated set by exhaustion, one witness per point.
/// Throws BudgetExceeded when the instance has more trees than the budget.
inline Frontier exact_frontier(const Graph& g, const EnumerationBudget& budget = {}) {
    const int n = g.n();
    // gamma -> (tau, witness edge ids); tau strictly decreasing in gamma
    std::map<Cost, std::pair<Cost, std::vector<int>>> pareto;

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n) + 1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<Cost> depth(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);

    auto stats = enumerate_spanning_trees(g, budget, [&](std::span<const int> ids) {
        for (int v = 1; v <= n; ++v) adj[static_cast<std::size_t>(v)].clear();
        Cost tau = 0;
        for (int id : ids) {
            const Edge& e = g.edge(id);
            adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
            adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
            tau += e.trench;
        }
        order.assign(1, g.root());
        std::fill(seen.begin(), seen.end(), 0);
        seen[static_cast<std::size_t>(g.root())] = 1;
        depth[static_cast<std::size_t>(g.root())] = 0;
        Cost gamma = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int u = order[head];
            for (auto [w, id] : adj[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + g.edge(id).cable;
                gamma += depth[static_cast<std::size_t>(w)];
                order.push_back(w);
            }
        }

        auto it = pareto.lower_bound(gamma);
        if (it != pareto.begin() && std::prev(it)->second.first <= tau) return; // dominated
        if (it != pareto.end() && it->first == gamma && it->second.first <= tau) return;
        while (it != pareto.end() && it->second.first >= tau) it = pareto.erase(it);
        pareto.emplace_hint(it, gamma, std::pair(tau, std::vector<int>(ids.begin(), ids.end())));
    });

    if (stats.budget_exceeded)
        raise(Errc::BudgetExceeded, "more than " + std::to_string(budget.max_trees) + " spanning trees");

    Frontier out;
    out.entries.reserve(pareto.size());
    for (auto& [gamma, rest] : pareto) {
        FrontierEntry fe;
        fe.point = {gamma, rest.first};
        fe.tree = tree_from_edges(g, rest.second);
        out.entries.push_back(std::move(fe));
    }
    return out;
}

} // namespace bgctp

#endif // BGCTP_ORACLE_HPP
