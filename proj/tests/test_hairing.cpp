#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "palin/canonical.hpp"
#include "palin/charpoly.hpp"
#include "palin/enumerate.hpp"
#include "palin/hairing.hpp"

using namespace palin;

TEST_CASE("hair_k vertex layout gives the block adjacency [[A,I],[I,0]]") {
    Graph g = cycle_graph(4);
    Graph h = hair_k(g, 1);
    REQUIRE(h.order() == 8);
    for (int v = 0; v < 4; ++v) {
        CHECK(h.has_edge(v, v + 4));
        CHECK(h.degree(v + 4) == 1);
    }
    CHECK(h.has_edge(0, 1));
    CHECK_FALSE(h.has_edge(4, 5));
    CHECK(hair_k(g, 3).order() == 16);
    CHECK_THROWS_AS(hair_k(g, 0), domain_error);
}

TEST_CASE("hairing polynomial identity for all connected graphs up to order 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            for (int k = 1; k <= 3; ++k)
                CHECK(char_poly(hair_k(g, k)) == substitute_hairing(char_poly(g), n, k));
}

TEST_CASE("dehair recovers the core of a hairing") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2 == 0) g.add_edge(u, v);
        DehairResult r = dehair(hair_k(g, 1));
        REQUIRE(r.ok());
        CHECK(isomorphic(r.cert->core_graph, g));
    }
}

TEST_CASE("dehair obstructions name the reason") {
    CHECK(dehair(path_graph(3)).obstruction == "odd order 3");
    // star K_{1,3}: center has several pendant neighbors
    CHECK(dehair(star_graph(3)).obstruction.find("2 pendant neighbors") != std::string::npos);
    // C4 has no pendant vertex at all
    CHECK(dehair(cycle_graph(4)).obstruction.find("no pendant neighbor") != std::string::npos);
    Graph iso(2); // two isolated vertices
    CHECK(dehair(iso).obstruction.find("isolated") != std::string::npos);
    // P6 is not a hairing (H(P3) is the order-6 caterpillar, not the path)
    CHECK_FALSE(dehair(path_graph(6)).ok());
}

TEST_CASE("K2 components dehair with the tie broken toward the lower index") {
    DehairResult r = dehair(path_graph(2));
    REQUIRE(r.ok());
    CHECK(r.cert->core == std::vector<int>{0});
    CHECK(r.cert->hair_of[0] == 1);
    CHECK(r.cert->core_graph.order() == 1);
}

TEST_CASE("hairings of disconnected graphs are recognized per component") {
    Graph g = disjoint_union(cycle_graph(3), path_graph(2));
    DehairResult r = dehair(hair_k(g, 1));
    REQUIRE(r.ok());
    CHECK(isomorphic(r.cert->core_graph, g));
}

TEST_CASE("predicted class of a hairing matches the computed class") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            PalindromeClass want = predict_class_of_hairing(g);
            PalindromeClass got = classify(char_poly(hair_k(g, 1)));
            CHECK(want.kind == got.kind);
            CHECK(got.absolute); // hairings are always absolutely palindromic
        }
}

TEST_CASE("bipartition of a hairing balances") {
    CHECK(hairing_bipartition_balance(path_graph(5)));
    CHECK(hairing_bipartition_balance(cycle_graph(6)));
    CHECK_THROWS_AS(hairing_bipartition_balance(cycle_graph(5)), not_bipartite_input);
}

TEST_CASE("quasisymplectic identities hold exactly") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2 == 0) g.add_edge(u, v);
        SymplecticReport rep = symplectic_check(g);
        CHECK(rep.block_ok);
        CHECK(rep.quasisymplectic_ok);
        CHECK(rep.inverse_ok);
        CHECK(rep.det_ok);
    }
    CHECK_THROWS_AS(symplectic_check(Graph(33)), order_too_large);
}
