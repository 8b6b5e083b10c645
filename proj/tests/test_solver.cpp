#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "test_util.hpp"

using namespace bgctp;
using testutil::example1;

namespace {

std::vector<ObjectivePoint> all_tree_points(const Graph& g) {
    std::vector<ObjectivePoint> pts;
    enumerate_spanning_trees(g, {200'000}, [&](std::span<const int> ids) {
        pts.push_back(eval_tree_edges(g, ids));
    });
    return pts;
}

// Extreme points of the lower-left convex hull (strict turns drop collinear
// interior points) — the independent oracle for the supported set.
std::vector<ObjectivePoint> lower_hull_extremes(const std::vector<ObjectivePoint>& frontier) {
    std::vector<ObjectivePoint> hull;
    for (const ObjectivePoint& p : frontier) {
        while (hull.size() >= 2) {
            const ObjectivePoint& a = hull[hull.size() - 2];
            const ObjectivePoint& b = hull[hull.size() - 1];
            const __int128 lhs = static_cast<__int128>(b.tau - a.tau) * (p.gamma - b.gamma);
            const __int128 rhs = static_cast<__int128>(p.tau - b.tau) * (b.gamma - a.gamma);
            if (lhs < rhs) break; // slopes strictly increase at b
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return hull;
}

} // namespace

TEST_CASE("compute_scaling on the fixture") {
    const ScalingInfo s = compute_scaling(example1());
    CHECK(s.d_lex == 6); // 21 - 15
    CHECK(s.scale == 7);
}

TEST_CASE("compute_scaling when SPT and MST coincide") {
    const Graph path = validate_graph({{1, 2, 2, 2}, {2, 3, 3, 3}}, 3, 1);
    const ScalingInfo s = compute_scaling(path);
    CHECK(s.d_lex == 0);
    CHECK(s.scale == 1);
}

TEST_CASE("compute_scaling equals the frontier trench spread") {
    // On the two-blade windmill the shortest-path optimum uses the direct
    // spokes (tau 77) while the MST takes a+b per blade (tau 55).
    const Graph wm = gen_windmill(2);
    const ScalingInfo s = compute_scaling(wm);
    CHECK(s.d_lex == 22);
    CHECK(s.scale == 23);

    for (const Graph& g : testutil::small_instance_pool()) {
        const Frontier f = exact_frontier(g, {200'000});
        const Cost spread = f.entries.front().point.tau - f.entries.back().point.tau;
        CHECK(compute_scaling(g).d_lex == spread);
    }
}

TEST_CASE("compute_scaling guards the 64-bit objective range") {
    CHECK_NOTHROW(compute_scaling(gen_windmill(8)));
    try {
        compute_scaling(gen_windmill(10));
        FAIL("expected CostOverflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CostOverflow);
    }
}

TEST_CASE("epsilon cut filter on the fixture") {
    const Graph g = example1();
    // S = two cheapest trench costs {4, 5}, sum 9
    CHECK(epsilon_cut_filter(g, 20) == std::vector<int>{0, 1, 2, 3}); // threshold 11
    const auto at18 = epsilon_cut_filter(g, 18);                      // threshold 9 cuts (1,4)
    CHECK(at18 == std::vector<int>{0, 2, 3});
    CHECK(epsilon_cut_filter(g, 12).empty()); // below sum(S) + min trench
}

TEST_CASE("cut-filtered edges appear in no feasible tree") {
    for (const Graph& g : testutil::small_instance_pool()) {
        if (g.edge_count() > 12) continue;
        const auto mst = kruskal_mst(g);
        for (Cost eps : {mst->trench, mst->trench + 3, mst->trench * 2}) {
            const auto admissible = epsilon_cut_filter(g, eps);
            std::set<int> ok(admissible.begin(), admissible.end());
            enumerate_spanning_trees(g, {100'000}, [&](std::span<const int> ids) {
                Cost tau = 0;
                for (int id : ids) tau += g.edge(id).trench;
                if (tau > eps) return;
                for (int id : ids) CHECK(ok.count(id) == 1);
            });
        }
    }
}

TEST_CASE("solve_subproblem reproduces the fixture iterations") {
    const Graph g = example1();
    const ScalingInfo s = compute_scaling(g);
    REQUIRE(s.scale == 7);

    SubproblemSpec spec;
    spec.scaling = s;

    spec.epsilon = 20;
    auto r = solve_subproblem(g, spec);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.point == ObjectivePoint{29, 19});
    CHECK(r.objective == 222);
    auto t2 = testutil::edge_ids(g, {{1, 2}, {1, 4}, {3, 4}});
    std::sort(t2.begin(), t2.end());
    CHECK(r.tree->edges == t2);

    spec.epsilon = 18;
    r = solve_subproblem(g, spec);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.point == ObjectivePoint{31, 15});
    CHECK(r.objective == 232);

    spec.epsilon = 14;
    r = solve_subproblem(g, spec);
    CHECK(r.status == SolveStatus::Infeasible);
}

TEST_CASE("solve_subproblem matches exhaustive minimization for every budget") {
    for (const Graph& g : testutil::small_instance_pool()) {
        if (g.edge_count() > 12) continue;
        const ScalingInfo s = compute_scaling(g);
        const auto pts = all_tree_points(g);

        std::set<Cost> taus;
        for (const auto& p : pts) taus.insert(p.tau);
        std::vector<Cost> budgets{*taus.begin() - 1};
        for (Cost t : taus) {
            budgets.push_back(t);
            budgets.push_back(t - 1);
        }

        for (Cost eps : budgets) {
            if (eps < 0) continue;
            Cost best = kUnreachable;
            for (const auto& p : pts)
                if (p.tau <= eps) best = std::min(best, s.scale * p.gamma + p.tau);

            for (bool cut : {true, false}) {
                SubproblemSpec spec;
                spec.epsilon = eps;
                spec.scaling = s;
                spec.cut_enabled = cut;
                const auto r = solve_subproblem(g, spec);
                if (best == kUnreachable) {
                    CHECK(r.status == SolveStatus::Infeasible);
                } else {
                    REQUIRE(r.status == SolveStatus::Optimal);
                    CHECK(r.objective == best);
                    CHECK(eval_tree(g, *r.tree) == r.point);
                    CHECK(r.point.tau <= eps);
                }
            }
        }
    }
}

TEST_CASE("solve_subproblem accepts an incumbent hint") {
    const Graph g = example1();
    SubproblemSpec spec;
    spec.scaling = compute_scaling(g);
    spec.epsilon = 20;
    spec.incumbent_hint = tree_from_edges(g, testutil::edge_ids(g, {{1, 2}, {2, 3}, {3, 4}}));
    const auto r = solve_subproblem(g, spec);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.point == ObjectivePoint{29, 19});
}

TEST_CASE("solve_frontier enumerates the fixture frontier") {
    const auto [frontier, report] = solve_frontier(example1());
    CHECK(frontier.points() == std::vector<ObjectivePoint>{{26, 21}, {29, 19}, {31, 15}});
    CHECK(report.points_found == 3);
    CHECK(report.subproblems_solved == 3); // two optima plus one infeasibility proof
    CHECK_FALSE(report.timed_out);
    CHECK(report.bnb_nodes > 0);

    // witnesses are the three fixture trees
    auto t1 = testutil::edge_ids(example1(), {{1, 2}, {1, 4}, {2, 3}});
    std::sort(t1.begin(), t1.end());
    CHECK(frontier[0].tree.edges == t1);
}

TEST_CASE("solve_frontier on windmills yields 2^k points") {
    for (int k = 1; k <= 5; ++k) {
        const auto [frontier, report] = solve_frontier(gen_windmill(k));
        CHECK(frontier.size() == (std::size_t{1} << k));
        CHECK_FALSE(report.timed_out);
    }
}

TEST_CASE("solve_frontier on a tree-shaped instance solves nothing") {
    const Graph path = validate_graph({{1, 2, 3, 3}, {2, 3, 4, 4}}, 3, 1);
    const auto [frontier, report] = solve_frontier(path);
    REQUIRE(frontier.size() == 1);
    CHECK(frontier[0].point == ObjectivePoint{10, 7});
    CHECK(report.subproblems_solved == 0); // ideal point feasible
}

TEST_CASE("solve_frontier equals the exhaustive frontier") {
    for (const Graph& g : testutil::small_instance_pool()) {
        const auto exact = exact_frontier(g, {200'000}).points();
        const auto [frontier, report] = solve_frontier(g);
        CHECK(frontier.points() == exact);
        CHECK(report.points_found == static_cast<int>(exact.size()));
        for (const FrontierEntry& e : frontier.entries) CHECK(eval_tree(g, e.tree) == e.point);
    }
}

TEST_CASE("the cut changes nothing but the work") {
    for (const Graph& g : testutil::small_instance_pool()) {
        const auto with = solve_frontier(g, {true, 300.0});
        const auto without = solve_frontier(g, {false, 300.0});
        CHECK(with.frontier.points() == without.frontier.points());
        CHECK(without.report.cut_filtered_edges == 0);
    }
}

TEST_CASE("solve_frontier is deterministic") {
    const Graph g = gen_complete(7, CostMode::Gctp, 5);
    const auto a = solve_frontier(g);
    const auto b = solve_frontier(g);
    REQUIRE(a.frontier.size() == b.frontier.size());
    for (std::size_t i = 0; i < a.frontier.size(); ++i) {
        CHECK(a.frontier[i].point == b.frontier[i].point);
        CHECK(a.frontier[i].tree.edges == b.frontier[i].tree.edges);
    }
    CHECK(a.report.bnb_nodes == b.report.bnb_nodes);
}

TEST_CASE("solve_frontier honors the time limit") {
    const auto [frontier, report] = solve_frontier(example1(), {true, 0.0});
    CHECK(report.timed_out);
    CHECK(frontier.size() == 1); // the polynomial lexicographic point survives
}

TEST_CASE("lexmin_tau_gamma fixtures") {
    const Graph g = example1();
    const auto [tree, point] = lexmin_tau_gamma(g);
    CHECK(point == ObjectivePoint{31, 15});

    const auto [wt, wp] = lexmin_tau_gamma(gen_windmill(1));
    CHECK(wp == ObjectivePoint{8, 5});

    const Graph path = validate_graph({{1, 2, 2, 2}, {2, 3, 3, 3}}, 3, 1);
    const auto [pt, pp] = lexmin_tau_gamma(path);
    CHECK(pp == ObjectivePoint{7, 5});
    (void)tree;
    (void)wt;
    (void)pt;
}

TEST_CASE("lexmin_tau_gamma is lexicographically optimal against exhaustion") {
    for (const Graph& g : testutil::small_instance_pool()) {
        if (g.edge_count() > 12) continue;
        const auto mst = kruskal_mst(g);
        Cost best_gamma = kUnreachable;
        for (const auto& p : all_tree_points(g))
            if (p.tau == mst->trench) best_gamma = std::min(best_gamma, p.gamma);
        const auto [tree, point] = lexmin_tau_gamma(g);
        CHECK(point.tau == mst->trench);
        CHECK(point.gamma == best_gamma);
        (void)tree;
    }
}

TEST_CASE("supported_frontier separates the unsupported fixture point") {
    const auto [frontier, report] = supported_frontier(example1());
    CHECK(frontier.points() == std::vector<ObjectivePoint>{{26, 21}, {31, 15}});
    CHECK_FALSE(report.timed_out);
}

TEST_CASE("supported_frontier on the one-blade windmill keeps both points") {
    const auto [frontier, report] = supported_frontier(gen_windmill(1));
    CHECK(frontier.points() == std::vector<ObjectivePoint>{{7, 7}, {8, 5}});
    (void)report;
}

TEST_CASE("supported_frontier of an ideal-feasible instance is one point") {
    const Graph path = validate_graph({{1, 2, 2, 2}, {2, 3, 3, 3}}, 3, 1);
    const auto [frontier, report] = supported_frontier(path);
    CHECK(frontier.size() == 1);
    (void)report;
}

TEST_CASE("supported_frontier equals the hull extremes of the full frontier") {
    for (const Graph& g : testutil::small_instance_pool()) {
        const auto full = exact_frontier(g, {200'000}).points();
        const auto hull = lower_hull_extremes(full);
        const auto [frontier, report] = supported_frontier(g);
        CHECK(frontier.points() == hull);
        CHECK_FALSE(report.timed_out);

        // supported subset of the non-dominated set
        for (const ObjectivePoint& p : frontier.points())
            CHECK(std::find(full.begin(), full.end(), p) != full.end());
    }
}
