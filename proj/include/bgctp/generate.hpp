#ifndef BGCTP_GENERATE_HPP
#define BGCTP_GENERATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bgctp/graph.hpp"
#include "bgctp/rng.hpp"

namespace bgctp {

enum class Family { Incomplete, Complete, Grid, Location, Windmill };
enum class CostMode { Ctp, Gctp };
enum class PointDistribution { Uniform, Normal };
enum class EdgeRule { Random, MinEuclidean, MinManhattan };

struct InstanceSpec {
    Family family = Family::Incomplete;
    int n = 0;
    double density = 0.5; // incomplete / location
    PointDistribution dist = PointDistribution::Uniform;
    EdgeRule edge_rule = EdgeRule::Random;
    CostMode cost_mode = CostMode::Ctp;
    std::int64_t seed = 1;
    int blades = 1; // windmill
};

inline const char* family_name(Family f) {
    switch (f) {
    case Family::Incomplete: return "incomplete";
    case Family::Complete: return "complete";
    case Family::Grid: return "grid";
    case Family::Location: return "location";
    case Family::Windmill: return "windmill";
    }
    return "?";
}

inline const char* cost_mode_name(CostMode m) { return m == CostMode::Ctp ? "ctp" : "gctp"; }

inline const char* edge_rule_name(EdgeRule r) {
    switch (r) {
    case EdgeRule::Random: return "random";
    case EdgeRule::MinEuclidean: return "min_euclidean";
    case EdgeRule::MinManhattan: return "min_manhattan";
    }
    return "?";
}

inline const char* distribution_name(PointDistribution d) {
    return d == PointDistribution::Uniform ? "uniform" : "normal";
}

namespace detail {

inline long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

inline int target_edge_count(int n, double density) {
    if (!(density > 0.0) || density > 1.0) raise(Errc::InvalidArgument, "density must lie in (0, 1]");
    const long long m = std::llround(density * static_cast<double>(pair_count(n)));
    if (m < n - 1)
        raise(Errc::InfeasibleDensity, "density " + std::to_string(density) + " yields " +
                                           std::to_string(m) + " edges, below n-1");
    if (m > pair_count(n)) raise(Errc::InfeasibleDensity, "density above 1");
    return static_cast<int>(m);
}

// Draw order: costs are assigned in ascending (u, v) edge order after the
// topology is fixed. CTP copies one draw into both coordinates, GCTP draws
// cable first, then trench.
inline std::vector<Edge> finish_costs(std::vector<std::pair<int, int>> pairs, CostMode mode, Lehmer& rng) {
    for (auto& [u, v] : pairs)
        if (u > v) std::swap(u, v);
    std::sort(pairs.begin(), pairs.end());
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        Edge e{u, v, 0, 0};
        if (mode == CostMode::Ctp) {
            e.cable = e.trench = rng.next_cost();
        } else {
            e.cable = rng.next_cost();
            e.trench = rng.next_cost();
        }
        edges.push_back(e);
    }
    return edges;
}

// Random spanning tree: Fisher-Yates permutation of 1..n (positions n-1 down
// to 1, one draw each), then each later vertex attaches to a uniformly drawn
// earlier one (one draw per vertex).
inline std::vector<std::pair<int, int>> random_tree(int n, Lehmer& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i >= 1; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.next_below(i + 1))]);
    std::vector<std::pair<int, int>> tree;
    tree.reserve(static_cast<std::size_t>(n) - 1);
    for (int k = 1; k < n; ++k)
        tree.emplace_back(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(rng.next_below(k))]);
    return tree;
}

class PairPresence {
public:
    explicit PairPresence(int n) : n_(n), present_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0) {}

    bool insert(int u, int v) {
        if (u > v) std::swap(u, v);
        auto& cell = present_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(v)];
        if (cell) return false;
        cell = 1;
        return true;
    }

private:
    int n_;
    std::vector<std::uint8_t> present_;
};

// Uniform absent-pair rejection sampling: two vertex draws per attempt.
inline void add_random_extras(int n, int target, std::vector<std::pair<int, int>>& pairs,
                              PairPresence& present, Lehmer& rng) {
    while (static_cast<int>(pairs.size()) < target) {
        const int a = 1 + static_cast<int>(rng.next_below(n));
        const int b = 1 + static_cast<int>(rng.next_below(n));
        if (a == b) continue;
        if (!present.insert(a, b)) continue;
        pairs.emplace_back(a, b);
    }
}

} // namespace detail

/// Random connected graph at the requested density: random spanning tree,
/// uniform extra pairs, NETGEN-style cost draws.
inline Graph gen_incomplete(int n, double density, CostMode mode, std::int64_t seed) {
    if (n < 2) raise(Errc::InvalidArgument, "need n >= 2");
    const int m = detail::target_edge_count(n, density);
    Lehmer rng(seed);
    auto pairs = detail::random_tree(n, rng);
    detail::PairPresence present(n);
    for (auto [u, v] : pairs) present.insert(u, v);
    detail::add_random_extras(n, m, pairs, present, rng);
    return Graph(n, 1, detail::finish_costs(std::move(pairs), mode, rng));
}

inline Graph gen_complete(int n, CostMode mode, std::int64_t seed) {
    if (n < 2) raise(Errc::InvalidArgument, "need n >= 2");
    Lehmer rng(seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(detail::pair_count(n)));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    return Graph(n, 1, detail::finish_costs(std::move(pairs), mode, rng));
}

/// Row-major grid of width round(sqrt(n)); the last row may be shorter.
inline Graph gen_grid(int n, CostMode mode, std::int64_t seed) {
    if (n < 2) raise(Errc::InvalidArgument, "need n >= 2");
    const int w = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    Lehmer rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v <= n; ++v) {
        const int col = (v - 1) % w + 1;
        if (col < w && v + 1 <= n) pairs.emplace_back(v, v + 1);
        if (v + w <= n) pairs.emplace_back(v, v + w);
    }
    return Graph(n, 1, detail::finish_costs(std::move(pairs), mode, rng));
}

struct LocationInstance {
    Graph graph;
    std::vector<std::array<double, 2>> coords; // 1-based like vertices; coords[0] unused
};

/// Planar instance: n random points (uniform on the unit square or standard
/// bivariate normal), edges chosen per rule, costs from distances rescaled
/// so the largest candidate distance maps to 100 (clamped to >= 1).
/// Draw order: point coordinates first (x then y per vertex; a normal draw
/// consumes two uniforms), then topology draws for the random rule. The
/// metric rules draw nothing beyond the points. CTP uses the Manhattan
/// metric for min_manhattan and the Euclidean metric otherwise; GCTP stores
/// Euclidean in cable and Manhattan in trench.
inline LocationInstance gen_location_with_coords(int n, double density, PointDistribution dist,
                                                 EdgeRule rule, CostMode mode, std::int64_t seed) {
    if (n < 2) raise(Errc::InvalidArgument, "need n >= 2");
    const int m = detail::target_edge_count(n, density);
    Lehmer rng(seed);

    std::vector<std::array<double, 2>> pts(static_cast<std::size_t>(n) + 1, {0.0, 0.0});
    for (int v = 1; v <= n; ++v) {
        if (dist == PointDistribution::Uniform) {
            pts[static_cast<std::size_t>(v)][0] = rng.next_uniform();
            pts[static_cast<std::size_t>(v)][1] = rng.next_uniform();
        } else {
            pts[static_cast<std::size_t>(v)][0] = rng.next_normal();
            pts[static_cast<std::size_t>(v)][1] = rng.next_normal();
        }
    }

    struct Candidate {
        int u, v;
        double euclid, manhattan;
    };
    std::vector<Candidate> cands;
    cands.reserve(static_cast<std::size_t>(detail::pair_count(n)));
    double max_euclid = 0.0, max_manhattan = 0.0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const double dx = pts[static_cast<std::size_t>(u)][0] - pts[static_cast<std::size_t>(v)][0];
            const double dy = pts[static_cast<std::size_t>(u)][1] - pts[static_cast<std::size_t>(v)][1];
            Candidate c{u, v, std::sqrt(dx * dx + dy * dy), std::abs(dx) + std::abs(dy)};
            max_euclid = std::max(max_euclid, c.euclid);
            max_manhattan = std::max(max_manhattan, c.manhattan);
            cands.push_back(c);
        }

    std::vector<std::pair<int, int>> pairs;
    detail::PairPresence present(n);
    if (rule == EdgeRule::Random) {
        pairs = detail::random_tree(n, rng);
        for (auto [u, v] : pairs) present.insert(u, v);
        detail::add_random_extras(n, m, pairs, present, rng);
    } else {
        const bool euclid = rule == EdgeRule::MinEuclidean;
        std::vector<int> order(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double da = euclid ? cands[static_cast<std::size_t>(a)].euclid
                                     : cands[static_cast<std::size_t>(a)].manhattan;
            const double db = euclid ? cands[static_cast<std::size_t>(b)].euclid
                                     : cands[static_cast<std::size_t>(b)].manhattan;
            return std::pair(da, a) < std::pair(db, b);
        });
        // the metric MST first, then remaining pairs in metric order
        detail::DisjointSets dsu(n);
        for (int i : order) {
            if (static_cast<int>(pairs.size()) == n - 1) break;
            const Candidate& c = cands[static_cast<std::size_t>(i)];
            if (!dsu.unite(c.u, c.v)) continue;
            pairs.emplace_back(c.u, c.v);
            present.insert(c.u, c.v);
        }
        for (int i : order) {
            if (static_cast<int>(pairs.size()) == m) break;
            const Candidate& c = cands[static_cast<std::size_t>(i)];
            if (!present.insert(c.u, c.v)) continue;
            pairs.emplace_back(c.u, c.v);
        }
    }

    auto scaled = [](double d, double maxd) -> Cost {
        if (maxd <= 0.0) return 1; // all points coincide
        return std::max<Cost>(1, std::llround(d * 100.0 / maxd));
    };

    std::sort(pairs.begin(), pairs.end());
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    const bool ctp_manhattan = mode == CostMode::Ctp && rule == EdgeRule::MinManhattan;
    for (auto [u, v] : pairs) {
        const std::size_t idx = static_cast<std::size_t>(
            (static_cast<long long>(u) - 1) * (2LL * n - u) / 2 + (v - u - 1));
        const Candidate& c = cands[idx];
        Edge e{u, v, 0, 0};
        if (mode == CostMode::Ctp) {
            const Cost cost = ctp_manhattan ? scaled(c.manhattan, max_manhattan) : scaled(c.euclid, max_euclid);
            e.cable = e.trench = cost;
        } else {
            e.cable = scaled(c.euclid, max_euclid);
            e.trench = scaled(c.manhattan, max_manhattan);
        }
        edges.push_back(e);
    }
    return {Graph(n, 1, std::move(edges)), std::move(pts)};
}

inline Graph gen_location(int n, double density, PointDistribution dist, EdgeRule rule, CostMode mode,
                          std::int64_t seed) {
    return gen_location_with_coords(n, density, dist, rule, mode, seed).graph;
}

/// Theorem-family instance: k triangular blades around the root with
/// digit-separated costs {3,4,2} * 10^(blade-1); the full frontier has 2^k
/// points. Deterministic, no randomness involved.
inline Graph gen_windmill(int blades) {
    if (blades < 1) raise(Errc::InvalidArgument, "need at least one blade");
    if (blades > 12) raise(Errc::CostOverflow, "blade costs exceed the edge cost cap for k > 12");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3 * blades));
    Cost p = 1;
    for (int k = 1; k <= blades; ++k) {
        edges.push_back({1, 2 * k, 3 * p, 3 * p});         // a_k
        edges.push_back({1, 2 * k + 1, 4 * p, 4 * p});     // d_k
        edges.push_back({2 * k, 2 * k + 1, 2 * p, 2 * p}); // b_k
        p *= 10;
    }
    return Graph(2 * blades + 1, 1, std::move(edges));
}

inline Graph generate(const InstanceSpec& spec) {
    switch (spec.family) {
    case Family::Incomplete: return gen_incomplete(spec.n, spec.density, spec.cost_mode, spec.seed);
    case Family::Complete: return gen_complete(spec.n, spec.cost_mode, spec.seed);
    case Family::Grid: return gen_grid(spec.n, spec.cost_mode, spec.seed);
    case Family::Location:
        return gen_location(spec.n, spec.density, spec.dist, spec.edge_rule, spec.cost_mode, spec.seed);
    case Family::Windmill: return gen_windmill(spec.blades);
    }
    raise(Errc::InvalidArgument, "unknown family");
}

} // namespace bgctp

#endif // BGCTP_GENERATE_HPP
