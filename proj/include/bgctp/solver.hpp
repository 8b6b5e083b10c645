#ifndef BGCTP_SOLVER_HPP
#define BGCTP_SOLVER_HPP

#include <chrono>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bgctp/dijkstra.hpp"
#include "bgctp/frontier.hpp"
#include "bgctp/graph.hpp"
#include "bgctp/kruskal.hpp"
#include "bgctp/scaling.hpp"

namespace bgctp {

enum class SolveStatus { Optimal, Infeasible, TimedOut };

struct SubproblemSpec {
    Cost epsilon = 0; // trench budget
    ScalingInfo scaling{};
    bool cut_enabled = true;
    std::optional<Tree> incumbent_hint{};
};

struct SubproblemResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Tree> tree{}; // best tree found (optimal, or incumbent on time-out)
    ObjectivePoint point{};
    Cost objective = 0; // scale * gamma + tau
    long long nodes = 0;
    long long cut_filtered = 0;
};

struct SolverConfig {
    bool cut_enabled = true;
    double time_limit_seconds = 300.0;
};

struct SolveReport {
    int points_found = 0;
    long long bnb_nodes = 0;
    int subproblems_solved = 0;
    std::vector<double> subproblem_ms{};
    bool timed_out = false;
    long long cut_filtered_edges = 0;
};

struct FrontierResult {
    Frontier frontier;
    SolveReport report;
};

namespace detail {

using SolverClock = std::chrono::steady_clock;

inline SolverClock::time_point deadline_after(double seconds) {
    return SolverClock::now() + std::chrono::duration_cast<SolverClock::duration>(
                                    std::chrono::duration<double>(seconds));
}

struct BnbQuery {
    Cost weight_gamma = 1;
    Cost weight_tau = 1;
    std::optional<Cost> epsilon{};
    bool cut_enabled = true;
    const Tree* hint = nullptr;
    std::optional<SolverClock::time_point> deadline{};
};

struct BnbOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<int> tree_ids{};
    ObjectivePoint point{};
    Cost value = 0;
    long long nodes = 0;
    long long cut_filtered = 0;
    bool has_incumbent = false;
};

/// Exact minimization of weight_gamma * c_gamma + weight_tau * c_tau over
/// spanning trees with c_tau <= epsilon. Branches on edges of the node's
/// cheapest shortest-path-tree completion; per-node lower bounds come from
/// the restricted MST (tau) and SSSP over non-forbidden edges (gamma).
class BnbEngine {
public:
    BnbEngine(const Graph& g, const BnbQuery& q)
        : g_(g), q_(q), trench_order_(edges_by_trench(g)),
          state_(static_cast<std::size_t>(g.edge_count()), kUndecided),
          enabled_(static_cast<std::size_t>(g.edge_count()), 1),
          forbidden_(static_cast<std::size_t>(g.edge_count()), 0),
          adj_scratch_(static_cast<std::size_t>(g.n()) + 1),
          depth_scratch_(static_cast<std::size_t>(g.n()) + 1, 0),
          seen_scratch_(static_cast<std::size_t>(g.n()) + 1, 0) {}

    BnbOutcome run() {
        check_objective_bounds(g_, q_.weight_gamma, q_.weight_tau);
        if (q_.cut_enabled && q_.epsilon) {
            std::vector<std::uint8_t> admissible(static_cast<std::size_t>(g_.edge_count()), 0);
            for (int id : epsilon_cut_filter(g_, *q_.epsilon)) admissible[static_cast<std::size_t>(id)] = 1;
            for (int id = 0; id < g_.edge_count(); ++id) {
                if (admissible[static_cast<std::size_t>(id)]) continue;
                forbid(id);
                ++out_.cut_filtered;
            }
        }
        if (q_.hint) consider(q_.hint->edges);
        dfs();

        out_.has_incumbent = has_incumbent_;
        if (has_incumbent_) {
            out_.tree_ids = incumbent_ids_;
            out_.point = incumbent_point_;
            out_.value = incumbent_value_;
        }
        if (timed_out_)
            out_.status = SolveStatus::TimedOut;
        else
            out_.status = has_incumbent_ ? SolveStatus::Optimal : SolveStatus::Infeasible;
        return out_;
    }

private:
    static constexpr std::uint8_t kUndecided = 0;
    static constexpr std::uint8_t kForced = 1;
    static constexpr std::uint8_t kForbidden = 2;

    void forbid(int id) {
        state_[static_cast<std::size_t>(id)] = kForbidden;
        enabled_[static_cast<std::size_t>(id)] = 0;
        forbidden_[static_cast<std::size_t>(id)] = 1;
    }

    void unforbid(int id) {
        state_[static_cast<std::size_t>(id)] = kUndecided;
        enabled_[static_cast<std::size_t>(id)] = 1;
        forbidden_[static_cast<std::size_t>(id)] = 0;
    }

    void dfs() {
        if (timed_out_) return;
        ++out_.nodes;
        if (q_.deadline && SolverClock::now() >= *q_.deadline) {
            timed_out_ = true;
            return;
        }

        const auto mst = kruskal_mst(g_, forced_, forbidden_, trench_order_);
        if (!mst) return;
        if (q_.epsilon && mst->trench > *q_.epsilon) return;
        consider(mst->edge_ids);

        const ShortestPaths sp = dijkstra_sssp(g_, enabled_);
        const Cost bound = q_.weight_gamma * sp.total + q_.weight_tau * mst->trench;
        if (has_incumbent_ && bound >= incumbent_value_) return;

        std::vector<int> relax = spt_completion(sp);
        consider(relax);
        if (has_incumbent_ && bound >= incumbent_value_) return;

        if (static_cast<int>(forced_.size()) == g_.n() - 1) return; // node fully decided

        const int e = select_branch_edge(relax);
        state_[static_cast<std::size_t>(e)] = kForced;
        forced_.push_back(e);
        dfs();
        forced_.pop_back();
        state_[static_cast<std::size_t>(e)] = kUndecided;
        if (timed_out_) return;

        forbid(e);
        dfs();
        unforbid(e);
    }

    // Candidate spanning tree: attach each vertex through its cheapest-trench
    // tight in-edge whose source is already connected to the root. With
    // positive cable costs a single pass in distance order suffices.
    std::vector<int> spt_completion(const ShortestPaths& sp) {
        const int n = g_.n();
        std::vector<int> verts;
        verts.reserve(static_cast<std::size_t>(n) - 1);
        for (int v = 1; v <= n; ++v)
            if (v != g_.root()) verts.push_back(v);
        std::sort(verts.begin(), verts.end(),
                  [&](int a, int b) { return std::pair(sp.dist[static_cast<std::size_t>(a)], a) <
                                             std::pair(sp.dist[static_cast<std::size_t>(b)], b); });

        std::vector<char> attached(static_cast<std::size_t>(n) + 1, 0);
        attached[static_cast<std::size_t>(g_.root())] = 1;
        std::vector<int> tree;
        tree.reserve(static_cast<std::size_t>(n) - 1);
        while (static_cast<int>(tree.size()) < n - 1) {
            bool progressed = false;
            for (int v : verts) {
                if (attached[static_cast<std::size_t>(v)]) continue;
                int pick = -1;
                for (int id : g_.incident(v)) {
                    if (!enabled_[static_cast<std::size_t>(id)]) continue;
                    const Edge& e = g_.edge(id);
                    const int u = e.u == v ? e.v : e.u;
                    if (!attached[static_cast<std::size_t>(u)]) continue;
                    const bool tight = (e.v == v) ? sp.tight_uv[static_cast<std::size_t>(id)]
                                                  : sp.tight_vu[static_cast<std::size_t>(id)];
                    if (!tight) continue;
                    if (pick < 0 ||
                        std::pair(e.trench, id) < std::pair(g_.edge(pick).trench, pick))
                        pick = id;
                }
                if (pick >= 0) {
                    attached[static_cast<std::size_t>(v)] = 1;
                    tree.push_back(pick);
                    progressed = true;
                }
            }
            if (!progressed) throw std::logic_error("spt_completion: connected subgraph has no SPT");
        }
        return tree;
    }

    // Undecided relaxation edge of maximal trench cost (ties: lowest id)
    // whose inclusion keeps the forced set acyclic. Such an edge exists
    // whenever fewer than n-1 edges are forced.
    int select_branch_edge(const std::vector<int>& relax) const {
        DisjointSets dsu(g_.n());
        for (int id : forced_) dsu.unite(g_.edge(id).u, g_.edge(id).v);
        int pick = -1;
        for (int id : relax) {
            if (state_[static_cast<std::size_t>(id)] != kUndecided) continue;
            const Edge& e = g_.edge(id);
            if (dsu.find(e.u) == dsu.find(e.v)) continue;
            if (pick < 0 || g_.edge(id).trench > g_.edge(pick).trench ||
                (g_.edge(id).trench == g_.edge(pick).trench && id < pick))
                pick = id;
        }
        if (pick < 0) throw std::logic_error("select_branch_edge: no candidate");
        return pick;
    }

    void consider(std::span<const int> ids) {
        Cost gamma = 0, tau = 0;
        eval_fast(ids, gamma, tau);
        if (q_.epsilon && tau > *q_.epsilon) return;
        const Cost value = q_.weight_gamma * gamma + q_.weight_tau * tau;
        if (!has_incumbent_ || value < incumbent_value_) {
            has_incumbent_ = true;
            incumbent_value_ = value;
            incumbent_point_ = {gamma, tau};
            incumbent_ids_.assign(ids.begin(), ids.end());
        }
    }

    void eval_fast(std::span<const int> ids, Cost& gamma, Cost& tau) {
        const int n = g_.n();
        for (int v = 1; v <= n; ++v) adj_scratch_[static_cast<std::size_t>(v)].clear();
        tau = 0;
        for (int id : ids) {
            const Edge& e = g_.edge(id);
            adj_scratch_[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
            adj_scratch_[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
            tau += e.trench;
        }
        std::fill(seen_scratch_.begin(), seen_scratch_.end(), 0);
        order_scratch_.assign(1, g_.root());
        seen_scratch_[static_cast<std::size_t>(g_.root())] = 1;
        depth_scratch_[static_cast<std::size_t>(g_.root())] = 0;
        gamma = 0;
        for (std::size_t head = 0; head < order_scratch_.size(); ++head) {
            const int u = order_scratch_[head];
            for (auto [w, id] : adj_scratch_[static_cast<std::size_t>(u)]) {
                if (seen_scratch_[static_cast<std::size_t>(w)]) continue;
                seen_scratch_[static_cast<std::size_t>(w)] = 1;
                depth_scratch_[static_cast<std::size_t>(w)] =
                    depth_scratch_[static_cast<std::size_t>(u)] + g_.edge(id).cable;
                gamma += depth_scratch_[static_cast<std::size_t>(w)];
                order_scratch_.push_back(w);
            }
        }
        if (static_cast<int>(order_scratch_.size()) != n)
            throw std::logic_error("eval_fast: edge set is not spanning");
    }

    const Graph& g_;
    BnbQuery q_;
    std::vector<int> trench_order_;
    std::vector<std::uint8_t> state_;
    std::vector<std::uint8_t> enabled_;
    std::vector<std::uint8_t> forbidden_;
    std::vector<int> forced_;

    bool has_incumbent_ = false;
    Cost incumbent_value_ = 0;
    ObjectivePoint incumbent_point_{};
    std::vector<int> incumbent_ids_;
    bool timed_out_ = false;
    BnbOutcome out_{};

    std::vector<std::vector<std::pair<int, int>>> adj_scratch_;
    std::vector<Cost> depth_scratch_;
    std::vector<char> seen_scratch_;
    std::vector<int> order_scratch_;
};

inline BnbOutcome lexmin_tau_gamma_impl(const Graph& g, std::optional<SolverClock::time_point> deadline) {
    const auto mst = kruskal_mst(g);
    const Tree hint = tree_from_edges(g, mst->edge_ids);
    // Every tree with c_tau <= c_tau(MST) attains it exactly, so minimizing
    // c_gamma + c_tau under that budget minimizes c_gamma alone.
    BnbQuery q;
    q.weight_gamma = 1;
    q.weight_tau = 1;
    q.epsilon = mst->trench;
    q.cut_enabled = true;
    q.hint = &hint;
    q.deadline = deadline;
    BnbOutcome out = BnbEngine(g, q).run();
    if (out.has_incumbent && out.point.tau != mst->trench)
        throw std::logic_error("lexmin_tau_gamma: tree beats the MST trench cost");
    return out;
}

} // namespace detail

/// One epsilon-constraint solve: minimize scale * c_gamma + c_tau subject to
/// c_tau <= epsilon, exactly, by branch-and-bound.
inline SubproblemResult solve_subproblem(const Graph& g, const SubproblemSpec& spec,
                                         std::optional<detail::SolverClock::time_point> deadline = {}) {
    detail::BnbQuery q;
    q.weight_gamma = spec.scaling.scale;
    q.weight_tau = 1;
    q.epsilon = spec.epsilon;
    q.cut_enabled = spec.cut_enabled;
    q.hint = spec.incumbent_hint ? &*spec.incumbent_hint : nullptr;
    q.deadline = deadline;
    detail::BnbOutcome out = detail::BnbEngine(g, q).run();

    SubproblemResult r;
    r.status = out.status;
    r.nodes = out.nodes;
    r.cut_filtered = out.cut_filtered;
    if (out.has_incumbent) {
        r.tree = tree_from_edges(g, out.tree_ids);
        r.point = out.point;
        r.objective = out.value;
    }
    return r;
}

/// Full non-dominated set via the hybrid epsilon-constraint loop: start from
/// lexmin(c_gamma, c_tau), then repeatedly tighten the trench budget to one
/// below the last tree until the subproblem turns infeasible.
inline FrontierResult solve_frontier(const Graph& g, const SolverConfig& cfg = {}) {
    const auto deadline = detail::deadline_after(cfg.time_limit_seconds);
    FrontierResult res;

    auto [t0, p0] = lexmin_gamma_tau(g);
    const auto mst = kruskal_mst(g);
    ScalingInfo scaling{p0.tau - mst->trench, p0.tau - mst->trench + 1};
    detail::check_objective_bounds(g, scaling.scale, 1);

    res.frontier.entries.push_back({p0, std::move(t0)});
    res.report.points_found = 1;
    if (scaling.d_lex == 0) return res; // ideal point feasible: single-point frontier

    Cost eps = p0.tau - 1;
    while (true) {
        const auto t_start = detail::SolverClock::now();
        SubproblemSpec spec;
        spec.epsilon = eps;
        spec.scaling = scaling;
        spec.cut_enabled = cfg.cut_enabled;
        SubproblemResult sub = solve_subproblem(g, spec, deadline);

        ++res.report.subproblems_solved;
        res.report.subproblem_ms.push_back(
            std::chrono::duration<double, std::milli>(detail::SolverClock::now() - t_start).count());
        res.report.bnb_nodes += sub.nodes;
        res.report.cut_filtered_edges += sub.cut_filtered;

        if (sub.status == SolveStatus::TimedOut) {
            res.report.timed_out = true;
            break;
        }
        if (sub.status == SolveStatus::Infeasible) break;
        eps = sub.point.tau - 1;
        res.frontier.entries.push_back({sub.point, std::move(*sub.tree)});
        ++res.report.points_found;
    }

    if (!is_valid_frontier(res.frontier))
        throw std::logic_error("solve_frontier: iterates are not mutually non-dominated");
    return res;
}

/// Lexicographic optimum (min c_tau, then min c_gamma): the minimum spanning
/// tree with cheapest total path cost. One epsilon-constraint solve at the
/// MST trench value.
inline std::pair<Tree, ObjectivePoint> lexmin_tau_gamma(const Graph& g) {
    detail::BnbOutcome out = detail::lexmin_tau_gamma_impl(g, std::nullopt);
    return {tree_from_edges(g, out.tree_ids), out.point}; // always feasible: the MST itself
}

namespace detail {

struct SupportedSearch {
    const Graph& g;
    std::optional<SolverClock::time_point> deadline;
    std::vector<FrontierEntry> found{};
    SolveReport report{};

    // p has smaller gamma and larger tau than q. Solves the weighted-sum
    // problem normal to segment (p, q) and recurses when a point strictly
    // below the segment exists. Taken by value: `found` reallocates.
    void refine(FrontierEntry p, FrontierEntry q) {
        if (report.timed_out) return;
        BnbQuery query;
        query.weight_gamma = p.point.tau - q.point.tau;
        query.weight_tau = q.point.gamma - p.point.gamma;
        query.cut_enabled = false;
        query.hint = &p.tree;
        query.deadline = deadline;

        const auto t_start = SolverClock::now();
        BnbOutcome out = BnbEngine(g, query).run();
        ++report.subproblems_solved;
        report.subproblem_ms.push_back(
            std::chrono::duration<double, std::milli>(SolverClock::now() - t_start).count());
        report.bnb_nodes += out.nodes;
        if (out.status == SolveStatus::TimedOut) {
            report.timed_out = true;
            return;
        }

        const Cost segment_value =
            query.weight_gamma * p.point.gamma + query.weight_tau * p.point.tau;
        if (out.value >= segment_value) return; // segment is already supported

        FrontierEntry w{out.point, tree_from_edges(g, out.tree_ids)};
        found.push_back(w);
        refine(p, w);
        refine(std::move(w), std::move(q));
    }
};

} // namespace detail

/// Extreme supported non-dominated points by dichotomic weighted sums
/// between the two lexicographic optima.
inline FrontierResult supported_frontier(const Graph& g, const SolverConfig& cfg = {}) {
    detail::SupportedSearch search{g, detail::deadline_after(cfg.time_limit_seconds)};

    auto [t0, p0] = lexmin_gamma_tau(g);
    search.found.push_back({p0, std::move(t0)});

    const auto t_start = detail::SolverClock::now();
    detail::BnbOutcome lex_tau = detail::lexmin_tau_gamma_impl(g, search.deadline);
    ++search.report.subproblems_solved;
    search.report.subproblem_ms.push_back(
        std::chrono::duration<double, std::milli>(detail::SolverClock::now() - t_start).count());
    search.report.bnb_nodes += lex_tau.nodes;

    if (lex_tau.status == SolveStatus::TimedOut) {
        search.report.timed_out = true;
    } else if (lex_tau.point != p0) {
        FrontierEntry left = search.found.front();
        FrontierEntry right{lex_tau.point, tree_from_edges(g, lex_tau.tree_ids)};
        search.found.push_back(right);
        search.refine(std::move(left), std::move(right));
    }

    FrontierResult res;
    res.frontier = dominance_filter(std::move(search.found));
    res.report = std::move(search.report);
    res.report.points_found = static_cast<int>(res.frontier.size());
    return res;
}

} // namespace bgctp

#endif // BGCTP_SOLVER_HPP
