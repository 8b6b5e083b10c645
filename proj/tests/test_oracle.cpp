#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace bgctp;
using testutil::example1;

namespace {

std::vector<std::vector<int>> collect_trees(const Graph& g, long long cap = 100'000) {
    std::vector<std::vector<int>> trees;
    enumerate_spanning_trees(g, {cap}, [&](std::span<const int> ids) {
        trees.emplace_back(ids.begin(), ids.end());
    });
    return trees;
}

} // namespace

TEST_CASE("enumeration counts on fixed graphs") {
    CHECK(collect_trees(example1()).size() == 4); // a 4-cycle has 4 trees
    const Graph k4 = gen_complete(4, CostMode::Ctp, 1);
    CHECK(collect_trees(k4).size() == 16); // Cayley: 4^2
    const Graph path = validate_graph({{1, 2, 1, 1}, {2, 3, 1, 1}}, 3, 1);
    const auto only = collect_trees(path);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == std::vector<int>{0, 1}); // tree input yields itself
}

TEST_CASE("enumeration agrees with the matrix-tree theorem") {
    for (const Graph& g : testutil::small_instance_pool()) {
        const long long expect = testutil::kirchhoff_tree_count(g);
        EnumerationStats stats = enumerate_spanning_trees(g, {500'000}, [](std::span<const int>) {});
        CHECK_FALSE(stats.budget_exceeded);
        CHECK(stats.trees == expect);
    }
}

TEST_CASE("enumeration visits each tree once, deterministically") {
    const Graph g = gen_complete(5, CostMode::Gctp, 3);
    const auto first = collect_trees(g);
    const auto second = collect_trees(g);
    CHECK(first == second);
    auto sorted = first;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("enumeration budget delivers a partial stream with a flag") {
    const Graph k4 = gen_complete(4, CostMode::Ctp, 1);
    int delivered = 0;
    EnumerationStats stats = enumerate_spanning_trees(k4, {3}, [&](std::span<const int>) { ++delivered; });
    CHECK(delivered == 3);
    CHECK(stats.trees == 3);
    CHECK(stats.budget_exceeded);
}

TEST_CASE("exact_frontier on the fixture") {
    const Frontier f = exact_frontier(example1());
    CHECK(f.points() == std::vector<ObjectivePoint>{{26, 21}, {29, 19}, {31, 15}});
}

TEST_CASE("exact_frontier on the two-blade windmill") {
    const Frontier f = exact_frontier(gen_windmill(2));
    CHECK(f.points() == std::vector<ObjectivePoint>{{77, 77}, {78, 75}, {87, 57}, {88, 55}});
}

TEST_CASE("exact_frontier of a tree-shaped instance is a single point") {
    const Graph path = validate_graph({{1, 2, 3, 3}, {2, 3, 4, 4}}, 3, 1);
    const Frontier f = exact_frontier(path);
    REQUIRE(f.size() == 1);
    CHECK(f[0].point == ObjectivePoint{10, 7});
}

TEST_CASE("exact_frontier throws when over budget") {
    try {
        exact_frontier(gen_complete(6, CostMode::Ctp, 1), {10});
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
    }
}

TEST_CASE("exact_frontier is invariant under edge-list permutation") {
    for (const Graph& g : testutil::small_instance_pool()) {
        if (g.edge_count() > 12) continue;
        const auto base = exact_frontier(g, {200'000}).points();

        std::vector<Edge> shuffled = g.edges();
        std::mt19937 rng(7);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t i = 0; i + 1 < shuffled.size(); i += 2)
            std::swap(shuffled[i].u, shuffled[i].v); // flipped endpoints normalize back
        const Graph permuted(g.n(), g.root(), std::move(shuffled));
        CHECK(exact_frontier(permuted, {200'000}).points() == base);
    }
}

TEST_CASE("every frontier witness re-evaluates to its point") {
    for (const Graph& g : testutil::small_instance_pool()) {
        const Frontier f = exact_frontier(g, {200'000});
        CHECK(is_valid_frontier(f));
        for (const FrontierEntry& e : f.entries) CHECK(eval_tree(g, e.tree) == e.point);
    }
}
