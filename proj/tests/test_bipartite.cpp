#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "reserve/bipartite.hpp"

#include "bruteforce.hpp"

using namespace reserve;

namespace {

BipartiteGraph complete(int n_left, int n_right, int capacity = 1) {
    BipartiteGraph g;
    g.n_left = n_left;
    g.right_capacity.assign(static_cast<size_t>(n_right), capacity);
    for (int l = 0; l < n_left; ++l)
        for (int r = 0; r < n_right; ++r)
            g.edges.emplace_back(l, r);
    return g;
}

BipartiteGraph random_graph(std::mt19937_64& rng, int max_side, int max_capacity) {
    std::uniform_int_distribution<int> side(1, max_side);
    std::uniform_int_distribution<int> cap(1, max_capacity);
    std::uniform_int_distribution<int> coin(0, 2);
    BipartiteGraph g;
    g.n_left = side(rng);
    const int n_right = side(rng);
    for (int r = 0; r < n_right; ++r)
        g.right_capacity.push_back(cap(rng));
    for (int l = 0; l < g.n_left; ++l)
        for (int r = 0; r < n_right; ++r)
            if (coin(rng) == 0)
                g.edges.emplace_back(l, r);
    return g;
}

} // namespace

TEST_CASE("max_cardinality_matching basics") {
    CHECK(max_cardinality_matching(complete(3, 3)).size == 3);
    CHECK(max_cardinality_matching(BipartiteGraph{3, {1, 1}, {}}).size == 0);

    SUBCASE("single beneficiary edge") {
        BipartiteGraph g{2, {1}, {{0, 0}}};
        const auto result = max_cardinality_matching(g);
        CHECK(result.size == 1);
        CHECK(result.left_to_right[0] == 0);
        CHECK_FALSE(result.left_to_right[1].has_value());
    }
    SUBCASE("capacities admit several left nodes") {
        BipartiteGraph g{3, {2}, {{0, 0}, {1, 0}, {2, 0}}};
        CHECK(max_cardinality_matching(g).size == 2);
    }
    SUBCASE("invalid graphs are rejected") {
        CHECK_THROWS_AS(max_cardinality_matching(BipartiteGraph{1, {1}, {{0, 3}}}), ReserveError);
        CHECK_THROWS_AS(max_cardinality_matching(BipartiteGraph{1, {-1}, {}}), ReserveError);
    }
}

TEST_CASE("max_cardinality_matching equals brute force on every small graph") {
    // Every edge subset of the 3x3 bipartite graph, unit capacities.
    for (int mask = 0; mask < (1 << 9); ++mask) {
        BipartiteGraph g;
        g.n_left = 3;
        g.right_capacity = {1, 1, 1};
        for (int bit = 0; bit < 9; ++bit)
            if (mask & (1 << bit))
                g.edges.emplace_back(bit / 3, bit % 3);
        REQUIRE(max_cardinality_matching(g).size == bruteforce::max_matching_size(g));
    }
}

TEST_CASE("max_cardinality_matching equals brute force on random capacitated graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const BipartiteGraph g = random_graph(rng, 7, 3);
        const auto result = max_cardinality_matching(g);
        REQUIRE(result.size == bruteforce::max_matching_size(g));

        // Sanity: the reported assignment is a real matching of that size.
        int total = 0;
        std::vector<int> used(g.right_capacity.size(), 0);
        for (int l = 0; l < g.n_left; ++l)
            if (const auto r = result.left_to_right[static_cast<size_t>(l)]) {
                ++total;
                ++used[static_cast<size_t>(*r)];
                REQUIRE(std::find(g.edges.begin(), g.edges.end(), std::pair{l, *r}) !=
                        g.edges.end());
            }
        REQUIRE(total == result.size);
        for (size_t r = 0; r < used.size(); ++r)
            REQUIRE(used[r] <= g.right_capacity[r]);
        REQUIRE(result.size <=
                std::min<long long>(g.n_left,
                                    std::accumulate(g.right_capacity.begin(),
                                                    g.right_capacity.end(), 0LL)));
    }
}

TEST_CASE("solve_assignment basics") {
    SUBCASE("the large unit dominates any number of small ones") {
        BipartiteGraph g = complete(1, 2);
        WeightedAssignment w(1, 2);
        w.set(0, 0, {1, 0});
        w.set(0, 1, {0, 1});
        const auto result = solve_assignment(g, w);
        CHECK(result.assigned[0] == 0);
        CHECK(result.objective == LexWeight{1, 0});
    }
    SUBCASE("all-zero weights give a zero objective") {
        BipartiteGraph g = complete(2, 2);
        WeightedAssignment w(2, 2);
        for (int l = 0; l < 2; ++l)
            for (int r = 0; r < 2; ++r)
                w.set(l, r, {});
        CHECK(solve_assignment(g, w).objective == LexWeight{});
    }
    SUBCASE("forbidden pairs are never used") {
        BipartiteGraph g = complete(2, 1, 2);
        WeightedAssignment w(2, 1);
        w.set(0, 0, {1, 0}); // left 1 stays forbidden
        const auto result = solve_assignment(g, w);
        CHECK(result.assigned[0] == 0);
        CHECK_FALSE(result.assigned[1].has_value());
    }
}

TEST_CASE("solve_assignment equals brute force on random instances") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> primary(0, 2);
    std::uniform_int_distribution<int> secondary(0, 3);
    std::uniform_int_distribution<int> forbid(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const BipartiteGraph g = random_graph(rng, 6, 2);
        WeightedAssignment w(g.n_left, g.n_right());
        for (const auto& [l, r] : g.edges)
            if (forbid(rng) != 0)
                w.set(l, r, {primary(rng), secondary(rng)});
        const auto result = solve_assignment(g, w);
        REQUIRE(result.objective == bruteforce::best_assignment_objective(g, w));

        // The reported assignment achieves the reported objective.
        LexWeight recomputed{};
        std::vector<int> used(g.right_capacity.size(), 0);
        for (int l = 0; l < g.n_left; ++l)
            if (const auto r = result.assigned[static_cast<size_t>(l)]) {
                const auto weight = w.weight(l, *r);
                REQUIRE(weight.has_value());
                recomputed = recomputed + *weight;
                ++used[static_cast<size_t>(*r)];
            }
        REQUIRE(recomputed == result.objective);
        for (size_t r = 0; r < used.size(); ++r)
            REQUIRE(used[r] <= g.right_capacity[r]);
    }
}
