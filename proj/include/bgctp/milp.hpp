#ifndef BGCTP_MILP_HPP
#define BGCTP_MILP_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "bgctp/graph.hpp"
#include "bgctp/scaling.hpp"

namespace bgctp {

struct MilpOptions {
    std::optional<Cost> epsilon{};                    // adds the trench budget row
    bool cut_rows = false;                            // adds one cut row per edge (needs epsilon)
    std::optional<std::pair<Cost, Cost>> weights{};   // (gamma, tau); default (scale, 1)
};

namespace detail {

class LpRow {
public:
    // coefficient printed only when explicit_coef (objective rows, coupling y)
    void add(Cost coef, const std::string& var, bool explicit_coef) {
        if (coef == 0 && !explicit_coef) return;
        if (first_) {
            if (coef < 0) os_ << "- ";
            first_ = false;
        } else {
            os_ << (coef < 0 ? " - " : " + ");
        }
        const Cost mag = coef < 0 ? -coef : coef;
        if (explicit_coef || mag != 1) os_ << mag << " ";
        os_ << var;
    }

    bool empty() const { return first_; }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
    bool first_ = true;
};

inline std::string x_name(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }
inline std::string y_name(int i, int j) { return "y_" + std::to_string(i) + "_" + std::to_string(j); }

} // namespace detail

/// Single-objective MILP in LP text format: flow variables x_i_j (continuous,
/// integrality is implied once the tree is fixed), tree variables y_i_j
/// (binary, i < j). Default objective is scale * cable + trench with scale
/// from compute_scaling. Byte-deterministic for a fixed input.
inline std::string export_milp(const Graph& g, const MilpOptions& opt = {}) {
    if (opt.cut_rows && !opt.epsilon)
        raise(Errc::InvalidArgument, "cut rows require an epsilon budget");

    Cost wg = 0, wt = 0;
    if (opt.weights) {
        wg = opt.weights->first;
        wt = opt.weights->second;
        if (wg < 0 || wt < 0) raise(Errc::InvalidArgument, "objective weights must be non-negative");
        detail::check_objective_bounds(g, wg, wt);
    } else {
        const ScalingInfo s = compute_scaling(g);
        wg = s.scale;
        wt = 1;
    }

    const int n = g.n();
    const int root = g.root();
    std::ostringstream out;
    out << "\\ bgctp instance: n=" << n << " m=" << g.edge_count() << " root=" << root << "\n";
    out << "\\ objective weights: gamma=" << wg << " tau=" << wt << "\n";

    out << "Minimize\n obj:";
    {
        detail::LpRow row;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            row.add(wg * e.cable, detail::x_name(e.u, e.v), true);
            row.add(wg * e.cable, detail::x_name(e.v, e.u), true);
        }
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            row.add(wt * e.trench, detail::y_name(e.u, e.v), true);
        }
        out << " " << row.str() << "\n";
    }

    out << "Subject To\n";
    {
        // root pushes n-1 units of flow
        detail::LpRow row;
        for (int id : g.incident(root)) row.add(1, detail::x_name(root, g.other_end(id, root)), false);
        out << " root_flow: " << row.str() << " = " << (n - 1) << "\n";
    }
    for (int i = 1; i <= n; ++i) {
        if (i == root) continue;
        detail::LpRow row;
        for (int id : g.incident(i)) row.add(1, detail::x_name(i, g.other_end(id, i)), false);
        for (int id : g.incident(i)) row.add(-1, detail::x_name(g.other_end(id, i), i), false);
        out << " flow_" << i << ": " << row.str() << " = -1\n";
    }
    {
        detail::LpRow row;
        for (int id = 0; id < g.edge_count(); ++id) row.add(1, detail::y_name(g.edge(id).u, g.edge(id).v), false);
        out << " tree_card: " << row.str() << " = " << (n - 1) << "\n";
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        detail::LpRow row;
        row.add(n - 1, detail::y_name(e.u, e.v), true);
        row.add(-1, detail::x_name(e.u, e.v), false);
        row.add(-1, detail::x_name(e.v, e.u), false);
        out << " couple_" << e.u << "_" << e.v << ": " << row.str() << " >= 0\n";
    }
    if (opt.epsilon) {
        detail::LpRow row;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            row.add(e.trench, detail::y_name(e.u, e.v), false);
        }
        if (row.empty()) row.add(0, detail::y_name(g.edge(0).u, g.edge(0).v), true);
        out << " eps_budget: " << row.str() << " <= " << *opt.epsilon << "\n";
    }
    if (opt.cut_rows) {
        Cost sum_s = 0;
        const std::vector<int> order = edges_by_trench(g);
        for (int i = 0; i < n - 2; ++i) sum_s += g.edge(order[static_cast<std::size_t>(i)]).trench;
        const Cost threshold = *opt.epsilon - sum_s;
        for (int id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            detail::LpRow row;
            row.add(e.trench, detail::y_name(e.u, e.v), true);
            out << " cut_" << e.u << "_" << e.v << ": " << row.str() << " <= " << threshold << "\n";
        }
    }

    out << "Bounds\n";
    for (int id : g.incident(root)) out << " " << detail::x_name(g.other_end(id, root), root) << " = 0\n";

    out << "Binaries\n";
    for (int id = 0; id < g.edge_count(); ++id)
        out << " " << detail::y_name(g.edge(id).u, g.edge(id).v) << "\n";
    out << "End\n";
    return out.str();
}

} // namespace bgctp

#endif // BGCTP_MILP_HPP
