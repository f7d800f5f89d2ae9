#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "palin/charpoly.hpp"
#include "palin/enumerate.hpp"
#include "palin/graph.hpp"
#include "palin/matchings.hpp"

using namespace palin;

TEST_CASE("known matching tallies") {
    // P4: m_0=1, m_1=3, m_2=1
    auto p4 = count_k_matchings(path_graph(4));
    CHECK(p4.m == std::vector<BigInt>{1, 3, 1});
    // K4: m_1=6, m_2=3
    auto k4 = count_k_matchings(complete_graph(4));
    CHECK(k4.m == std::vector<BigInt>{1, 6, 3});
    // star: no 2-matching; tallies always carry n/2+1 entries
    auto s5 = count_k_matchings(star_graph(5));
    CHECK(s5.m == std::vector<BigInt>{1, 5, 0, 0});
    CHECK(count_k_matchings(Graph(3)).m == std::vector<BigInt>{1, 0});
}

TEST_CASE("forest DP equals brute-force enumeration on all trees up to order 10") {
    for (int n = 1; n <= 10; ++n)
        for (const Graph& t : enumerate_trees(n))
            CHECK(count_k_matchings_forest(t).m == count_k_matchings_enum(t).m);
}

TEST_CASE("forest DP handles disconnected forests") {
    Graph f = disjoint_union(path_graph(3), path_graph(4));
    CHECK(count_k_matchings_forest(f).m == count_k_matchings_enum(f).m);
    CHECK_THROWS_AS(count_k_matchings_forest(cycle_graph(4)), not_a_forest);
}

TEST_CASE("perfect matching counts") {
    CHECK(count_perfect_matchings(path_graph(4)) == 1);
    CHECK(count_perfect_matchings(path_graph(5)) == 0);
    CHECK(count_perfect_matchings(complete_graph(6)) == 15); // (6-1)!! = 15
    CHECK(count_perfect_matchings(cycle_graph(8)) == 2);
    CHECK_THROWS_AS(count_k_matchings_enum(complete_graph(25)), order_too_large);
}

TEST_CASE("unique perfect matching on trees") {
    auto p4 = unique_perfect_matching(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->perfect);
    CHECK(p4->edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(p4->unique == true);
    CHECK_FALSE(unique_perfect_matching(path_graph(3)).has_value());
    CHECK_FALSE(unique_perfect_matching(star_graph(3)).has_value());
}

TEST_CASE("forest coefficient identity on every tree up to order 10") {
    for (int n = 1; n <= 10; ++n)
        for (const Graph& t : enumerate_trees(n)) CHECK(forest_coefficient_identity(t));
}

TEST_CASE("matching generating identity against the charpoly for general graphs") {
    // for any graph, a_{n-2} = -|E|; check the k=1 row of the tally
    for (const Graph& g : enumerate_connected(6)) {
        auto tally = count_k_matchings(g);
        CHECK(tally.m[1] == BigInt(g.edge_count()));
    }
}
