#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "palin/canonical.hpp"
#include "palin/enumerate.hpp"

using namespace palin;

TEST_CASE("graph counts up to isomorphism match the literature") {
    const long long all[] = {1, 2, 4, 11, 34, 156, 1044};
    const long long connected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(static_cast<long long>(enumerate_all(n).size()) == all[n - 1]);
        CHECK(static_cast<long long>(enumerate_connected(n).size()) == connected[n - 1]);
    }
}

TEST_CASE("order-8 connected count (the survey workload)") {
    CHECK(enumerate_connected(8, 4).size() == 11117);
}

TEST_CASE("generated graphs are canonical and pairwise distinct") {
    std::set<std::string> codes;
    for (const Graph& g : enumerate_all(6)) {
        std::string code = write_graph6(g);
        CHECK(code == canonical_code(g)); // emitted in canonical form
        CHECK(codes.insert(code).second);
    }
}

TEST_CASE("serial and parallel levels agree exactly") {
    auto parents = all_graphs_level(6, false, 1);
    CHECK(expand_level(parents, false, 1) == expand_level(parents, false, 4));
    auto tf_parents = all_graphs_level(6, true, 1);
    CHECK(expand_level(tf_parents, false, 1) == expand_level(tf_parents, false, 3));
}

TEST_CASE("triangle-free enumeration") {
    // triangle-free graphs on n nodes: 1, 2, 3, 7, 14, 38, 107, 410
    const long long tf[] = {1, 2, 3, 7, 14, 38, 107, 410};
    for (int n = 1; n <= 8; ++n) {
        auto level = all_graphs_level(n, true, 2);
        CHECK(static_cast<long long>(level.size()) == tf[n - 1]);
        for (const auto& b : level) CHECK(bitgraph_triangle_free(b));
    }
}

TEST_CASE("tree counts match the literature") {
    const long long trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
    for (int n = 1; n <= 14; ++n)
        CHECK(static_cast<long long>(enumerate_trees(n).size()) == trees[n - 1]);
}

TEST_CASE("order caps raise order_too_large") {
    CHECK_THROWS_AS(all_graphs_level(13, false, 1), order_too_large);
    CHECK_THROWS_AS(enumerate_trees(21), order_too_large);
    CHECK_THROWS_AS(all_graphs_level(0, false, 1), order_too_large);
}

TEST_CASE("bitgraph round trip") {
    Graph g = cycle_graph(5);
    CHECK(to_graph(to_bitgraph(g)) == g);
    CHECK(bitgraph_connected(to_bitgraph(g)));
    CHECK_FALSE(bitgraph_connected(to_bitgraph(Graph(3))));
}
