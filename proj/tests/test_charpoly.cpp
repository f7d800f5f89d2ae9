#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "palin/charpoly.hpp"
#include "palin/enumerate.hpp"
#include "palin/graph.hpp"

using namespace palin;

namespace {

Poly make(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> v;
    for (long long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

Graph random_graph(std::mt19937& rng, int n, unsigned denom) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % denom == 0) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("characteristic polynomials of pinned graphs") {
    CHECK(char_poly(Graph(0)) == Poly::one());
    CHECK(char_poly(Graph(1)) == make({1, 0}));
    CHECK(char_poly(path_graph(2)) == make({1, 0, -1}));
    CHECK(char_poly(complete_graph(3)) == make({1, 0, -3, -2}));
    CHECK(char_poly(path_graph(4)) == make({1, 0, -3, 0, 1}));
    CHECK(char_poly(cycle_graph(4)) == make({1, 0, -4, 0, 0}));
    // C6 + chord {0,3}: the paper's unique non-hairing antipalindromic graph
    Graph c6c = cycle_graph(6);
    c6c.add_edge(0, 3);
    CHECK(char_poly(c6c) == make({1, 0, -7, 0, 7, 0, -1}));
}

TEST_CASE("Berkowitz agrees with the Sachs oracle on all graphs up to order 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_all(n)) CHECK(char_poly(g) == char_poly_sachs(g));
}

TEST_CASE("Berkowitz agrees with the Sachs oracle on random graphs of orders 8-10") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 8 + static_cast<int>(rng() % 3);
        Graph g = random_graph(rng, n, 2);
        CHECK(char_poly(g) == char_poly_sachs(g));
    }
}

TEST_CASE("charpoly is multiplicative over disjoint unions") {
    Graph a = cycle_graph(5), b = path_graph(4);
    CHECK(char_poly(disjoint_union(a, b)) == char_poly(a) * char_poly(b));
}

TEST_CASE("int64 overflow falls back to exact big integers") {
    // K_40 coefficients overflow 64-bit; cross-check against the BigInt
    // matrix route
    Graph g = complete_graph(40);
    std::vector<std::vector<BigInt>> a(40, std::vector<BigInt>(40, BigInt(1)));
    for (int i = 0; i < 40; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    Poly chi = char_poly(g);
    CHECK(chi == char_poly_matrix(a));
    // chi(K_n) = (x - n + 1)(x + 1)^{n-1}
    Poly expect = Poly(std::vector<BigInt>{BigInt(1), BigInt(-39)}) *
                  pow(Poly(std::vector<BigInt>{BigInt(1), BigInt(1)}), 39);
    CHECK(chi == expect);
}

TEST_CASE("tree charpoly via matchings matches Berkowitz") {
    for (const Graph& t : enumerate_trees(9)) CHECK(tree_char_poly(t) == char_poly(t));
    CHECK_THROWS_AS(tree_char_poly(cycle_graph(4)), not_a_tree);
}

TEST_CASE("sachs oracle order cap") {
    CHECK_THROWS_AS(char_poly_sachs(complete_graph(13)), order_too_large);
}

TEST_CASE("approximate spectrum and reciprocal pairing") {
    Spectrum s = approx_spectrum(path_graph(4));
    REQUIRE(s.eigenvalues.size() == 4);
    // P4 spectrum: ±(1±sqrt(5))/2, reciprocal-paired (palindromic graph)
    CHECK(spectrum_reciprocal(s));
    CHECK_FALSE(spectrum_reciprocal(approx_spectrum(path_graph(3)))); // has 0 eigenvalue
    CHECK_FALSE(spectrum_reciprocal(approx_spectrum(complete_graph(3))));
    // sanity on the values themselves
    CHECK(s.eigenvalues[3] == doctest::Approx(1.618033988749895).epsilon(1e-9));
}
