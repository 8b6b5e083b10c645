#ifndef BGCTP_GRAPH_HPP
#define BGCTP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgctp/errors.hpp"

namespace bgctp {

using Cost = std::int64_t;

/// Largest admissible single-edge cost. Keeps the solver's scaled objective
/// inside signed 64-bit range for all instance sizes we target.
inline constexpr Cost kMaxEdgeCost = Cost{1} << 40;

struct Edge {
    int u = 0; // endpoints, 1-based; u < v after normalization
    int v = 0;
    Cost cable = 0;  // per-edge path (cable) cost coefficient
    Cost trench = 0; // per-edge tree (trench) cost coefficient
};

struct ObjectivePoint {
    Cost gamma = 0; // total root-to-vertex path cost
    Cost tau = 0;   // total tree cost

    friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

/// Componentwise <= and not equal.
inline bool dominates(const ObjectivePoint& p, const ObjectivePoint& q) {
    return p.gamma <= q.gamma && p.tau <= q.tau && p != q;
}

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n + 1), rank_(n + 1, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false if already in the same set
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

} // namespace detail

/// Undirected connected instance with a root vertex and bi-cost edges.
/// Vertices are 1..n. The edge list is normalized on construction: endpoints
/// flipped so u < v, edges sorted by (u, v). Edge ids are positions in that
/// normalized list and are the tie-breaking order everywhere in the suite.
class Graph {
public:
    Graph(int n, int root, std::vector<Edge> edges) : n_(n), root_(root), edges_(std::move(edges)) {
        if (n_ < 2) raise(Errc::InvalidArgument, "vertex count must be at least 2");
        if (root_ < 1 || root_ > n_) raise(Errc::InvalidArgument, "root out of range");
        for (Edge& e : edges_) {
            if (e.u == e.v) raise(Errc::SelfLoop, "edge " + pair_name(e.u, e.v));
            if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
                raise(Errc::InvalidArgument, "edge endpoint out of range: " + pair_name(e.u, e.v));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.cable < 0 || e.trench < 0) raise(Errc::NegativeCost, "edge " + pair_name(e.u, e.v));
            if (e.cable > kMaxEdgeCost || e.trench > kMaxEdgeCost)
                raise(Errc::CostOverflow, "edge " + pair_name(e.u, e.v));
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
                raise(Errc::DuplicateEdge, "edge " + pair_name(edges_[i].u, edges_[i].v));

        detail::DisjointSets dsu(n_);
        int components = n_;
        for (const Edge& e : edges_)
            if (dsu.unite(e.u, e.v)) --components;
        if (components != 1) raise(Errc::Disconnected, "graph has " + std::to_string(components) + " components");

        incident_.assign(n_ + 1, {});
        for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
            incident_[edges_[id].u].push_back(id);
            incident_[edges_[id].v].push_back(id);
        }
    }

    int n() const { return n_; }
    int root() const { return root_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    /// Edge ids incident to v, ascending.
    const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }

    int other_end(int edge_id, int v) const {
        const Edge& e = edge(edge_id);
        return e.u == v ? e.v : e.u;
    }

    /// True when cable and trench coefficients coincide on every edge.
    bool is_ctp() const {
        return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.cable == e.trench; });
    }

    static std::string pair_name(int u, int v) {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }

private:
    int n_;
    int root_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Normalizes and validates a raw edge list into a Graph.
inline Graph validate_graph(std::vector<Edge> raw, int n, int root) { return Graph(n, root, std::move(raw)); }

/// Spanning tree of a Graph: root-oriented parent structure plus edge set.
struct Tree {
    std::vector<int> parent;      // size n+1; parent[root] = 0
    std::vector<int> parent_edge; // size n+1; edge id into Graph::edges(); -1 at root
    std::vector<int> edges;       // the n-1 edge ids, ascending

    friend bool operator==(const Tree&, const Tree&) = default;
};

/// Builds the parent structure for `edge_ids`; throws NotSpanningTree unless
/// they form a spanning tree of g.
inline Tree tree_from_edges(const Graph& g, std::span<const int> edge_ids) {
    const int n = g.n();
    if (static_cast<int>(edge_ids.size()) != n - 1)
        raise(Errc::NotSpanningTree, "expected " + std::to_string(n - 1) + " edges, got " +
                                         std::to_string(edge_ids.size()));

    std::vector<std::vector<std::pair<int, int>>> adj(n + 1); // (neighbor, edge id)
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count()) raise(Errc::NotSpanningTree, "edge id out of range");
        const Edge& e = g.edge(id);
        adj[e.u].emplace_back(e.v, id);
        adj[e.v].emplace_back(e.u, id);
    }

    Tree t;
    t.parent.assign(n + 1, 0);
    t.parent_edge.assign(n + 1, -1);
    t.edges.assign(edge_ids.begin(), edge_ids.end());
    std::sort(t.edges.begin(), t.edges.end());
    for (std::size_t i = 1; i < t.edges.size(); ++i)
        if (t.edges[i - 1] == t.edges[i]) raise(Errc::NotSpanningTree, "duplicate edge id");

    std::vector<int> queue{g.root()};
    std::vector<char> seen(n + 1, 0);
    seen[g.root()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (auto [w, id] : adj[u]) {
            if (seen[w]) continue;
            seen[w] = 1;
            t.parent[w] = u;
            t.parent_edge[w] = id;
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != n) raise(Errc::NotSpanningTree, "edges do not span all vertices");
    return t;
}

/// Evaluates (c_gamma, c_tau). c_gamma is computed along two independent
/// routes (root-depth accumulation and subtree-size weighting) which must
/// agree exactly; a mismatch means a broken tree invariant.
inline ObjectivePoint eval_tree(const Graph& g, const Tree& t) {
    const int n = g.n();
    if (static_cast<int>(t.edges.size()) != n - 1) raise(Errc::NotSpanningTree, "wrong edge count");

    // Rebuild traversal order from the edge set rather than trusting the
    // parent arrays; eval is also the validity check.
    Tree checked = tree_from_edges(g, t.edges);

    std::vector<int> order{g.root()};
    order.reserve(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v)
        if (v != g.root()) children[checked.parent[v]].push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int c : children[order[head]]) order.push_back(c);

    Cost tau = 0;
    for (int id : checked.edges) tau += g.edge(id).trench;

    std::vector<Cost> depth(n + 1, 0);
    Cost gamma_depth = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        int v = order[i];
        depth[v] = depth[checked.parent[v]] + g.edge(checked.parent_edge[v]).cable;
        gamma_depth += depth[v];
    }

    std::vector<Cost> subtree(n + 1, 1);
    Cost gamma_subtree = 0;
    for (std::size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        subtree[checked.parent[v]] += subtree[v];
        gamma_subtree += subtree[v] * g.edge(checked.parent_edge[v]).cable;
    }

    if (gamma_depth != gamma_subtree)
        throw std::logic_error("eval_tree: path-cost routes disagree");
    return {gamma_depth, tau};
}

inline ObjectivePoint eval_tree_edges(const Graph& g, std::span<const int> edge_ids) {
    Tree t = tree_from_edges(g, edge_ids);
    return eval_tree(g, t);
}

} // namespace bgctp

#endif // BGCTP_GRAPH_HPP
