#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "palin/poly.hpp"

using namespace palin;

namespace {

Poly make(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> v;
    for (long long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

} // namespace

TEST_CASE("normalization and arithmetic basics") {
    CHECK(Poly::zero().is_zero());
    CHECK(Poly::zero().degree() == -1);
    CHECK(make({0, 0, 3, 1}) == make({3, 1})); // leading zeros stripped
    CHECK(make({1, 2}) + make({-1, -2}) == Poly::zero());
    CHECK(make({1, 0, -1}) * make({1, 0, -1}) == make({1, 0, -2, 0, 1}));
    CHECK(pow(make({1, 1}), 3) == make({1, 3, 3, 1}));
    CHECK(-make({1, -2}) == make({-1, 2}));
    CHECK(Poly::monomial(BigInt(5), 3) == make({5, 0, 0, 0}));
}

TEST_CASE("classification on pinned examples") {
    CHECK(classify(make({1, 0, -1})).kind == PalKind::Antipalindromic);        // K2
    CHECK(classify(make({1, 0, -3, 0, 1})).kind == PalKind::Palindromic);      // P4
    CHECK(classify(make({1, 0, -7, 0, 7, 0, -1})).kind == PalKind::Antipalindromic);
    PalindromeClass abs_only = classify(make({1, 0, -5, 0, 5, 0, 1}));
    CHECK(abs_only.kind == PalKind::Neither);
    CHECK(abs_only.absolute);
    CHECK_FALSE(classify(make({1, 0, -2})).absolute);
    CHECK_THROWS_AS(classify(Poly::zero()), zero_polynomial);
}

TEST_CASE("classify agrees with the algebraic reverse check on random polys") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100000; ++trial) {
        int deg = 1 + static_cast<int>(rng() % 6);
        std::vector<BigInt> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = static_cast<int>(rng() % 5) - 2;
        if (c[0] == 0) c[0] = 1;
        // bias toward symmetric inputs so both branches get exercised
        if (trial % 3 == 0)
            for (int i = 0; i <= deg / 2; ++i) c[static_cast<std::size_t>(deg - i)] = c[static_cast<std::size_t>(i)];
        if (trial % 7 == 0)
            for (int i = 0; i <= deg / 2; ++i) c[static_cast<std::size_t>(deg - i)] = -c[static_cast<std::size_t>(i)];
        Poly p(c);
        if (p.is_zero()) continue;
        PalindromeClass cls = classify(p);
        auto [pal, anti] = reverse_check(p);
        CHECK(pal == (cls.kind == PalKind::Palindromic));
        CHECK(anti == (cls.kind == PalKind::Antipalindromic));
    }
}

TEST_CASE("hairing substitution on a worked example") {
    // chi(K2) = x^2 - 1; x^2 chi(x - 1/x) = x^4 - 3x^2 + 1 = chi(H(K2)) = chi(P4)
    Poly k2 = make({1, 0, -1});
    CHECK(substitute_hairing(k2, 2, 1) == make({1, 0, -3, 0, 1}));
    // k = 2: x^4 chi(x - 2/x) = x^6 - 5x^4 + 4x^2
    CHECK(substitute_hairing(k2, 2, 2) == make({1, 0, -5, 0, 4, 0, 0}));
    CHECK_THROWS_AS(substitute_hairing(make({2, 0}), 1, 1), domain_error); // not monic
}

TEST_CASE("coefficient reflection a_i = (-1)^{n+i} a_{2n-i}") {
    CHECK(coefficient_reflection_check(make({1, 0, -3, 0, 1}), 2)); // chi(H(K2))
    CHECK(coefficient_reflection_check(make({1, 0, -1}), 1));       // chi(H(K1))
    CHECK_FALSE(coefficient_reflection_check(make({1, 0, -3, 0, 2}), 2));
    CHECK_THROWS_AS(coefficient_reflection_check(make({1, 0, 0}), 3), degree_mismatch);
}

TEST_CASE("display and decimal serialization") {
    CHECK(to_display(make({1, 0, -3, 0, 1})) == "λ^4-3λ^2+1");
    CHECK(to_display(Poly::zero()) == "0");
    CHECK(to_decimal_strings(make({1, -22, 0})) == std::vector<std::string>{"1", "-22", "0"});
}
