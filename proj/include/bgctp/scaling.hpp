#ifndef BGCTP_SCALING_HPP
#define BGCTP_SCALING_HPP

#include <algorithm>
#include <vector>

#include "bgctp/arborescence.hpp"
#include "bgctp/graph.hpp"
#include "bgctp/kruskal.hpp"

namespace bgctp {

/// Exact integer replacement for the hybrid term: minimizing
/// scale * c_gamma + c_tau with scale = d_lex + 1 makes any unit improvement
/// of c_gamma outweigh the largest trench spread between efficient trees,
/// so every optimum maps to a non-dominated point.
struct ScalingInfo {
    Cost d_lex = 0;
    Cost scale = 1; // d_lex + 1
};

namespace detail {

/// Conservative instance-wide objective bounds: any tree satisfies
/// c_gamma <= (n-1) * sum(cable) and c_tau <= sum(trench).
inline void check_objective_bounds(const Graph& g, Cost weight_gamma, Cost weight_tau) {
    __int128 sum_cable = 0, sum_trench = 0;
    for (const Edge& e : g.edges()) {
        sum_cable += e.cable;
        sum_trench += e.trench;
    }
    const __int128 max_gamma = static_cast<__int128>(g.n() - 1) * sum_cable;
    const __int128 limit = (static_cast<__int128>(1) << 62);
    if (static_cast<__int128>(weight_gamma) * max_gamma + static_cast<__int128>(weight_tau) * sum_trench >= limit)
        raise(Errc::CostOverflow, "scaled objective would exceed the 64-bit range");
}

} // namespace detail

/// d_lex = c_tau(lexmin(c_gamma, c_tau)) - c_tau(MST).
inline ScalingInfo compute_scaling(const Graph& g) {
    const auto [spt_tree, spt_point] = lexmin_gamma_tau(g);
    const auto mst = kruskal_mst(g); // a valid Graph always has one
    ScalingInfo s;
    s.d_lex = spt_point.tau - mst->trench;
    s.scale = s.d_lex + 1;
    detail::check_objective_bounds(g, s.scale, 1);
    return s;
}

/// The per-edge trench budget filter: with S the n-2 cheapest trench costs,
/// any tree containing edge e has c_tau >= trench(e) + sum(S), so e is
/// admissible under budget epsilon only if trench(e) <= epsilon - sum(S).
/// Returns the admissible edge ids, ascending (possibly empty).
inline std::vector<int> epsilon_cut_filter(const Graph& g, Cost epsilon) {
    std::vector<int> order = edges_by_trench(g);
    Cost sum_s = 0;
    for (int i = 0; i < g.n() - 2; ++i) sum_s += g.edge(order[static_cast<std::size_t>(i)]).trench;
    const Cost threshold = epsilon - sum_s;

    std::vector<int> admissible;
    for (int id = 0; id < g.edge_count(); ++id)
        if (g.edge(id).trench <= threshold) admissible.push_back(id);
    return admissible;
}

} // namespace bgctp

#endif // BGCTP_SCALING_HPP
