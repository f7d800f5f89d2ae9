#ifndef PALIN_MATCHINGS_HPP
#define PALIN_MATCHINGS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "palin/graph.hpp"
#include "palin/poly.hpp"

namespace palin {

struct MatchingTally {
    /// m[k] = number of k-edge matchings; m[0] = 1, m[1] = |E|
    std::vector<BigInt> m;
};

/// Forest inputs use the polynomial DP (no order cap); general graphs
/// branch-and-count with n <= 24.
MatchingTally count_k_matchings(const Graph& g);
MatchingTally count_k_matchings_enum(const Graph& g);   // n <= 24
MatchingTally count_k_matchings_forest(const Graph& g); // forests only

BigInt count_perfect_matchings(const Graph& g); // n <= 24

struct MatchingCertificate {
    std::vector<std::pair<int, int>> edges;
    bool perfect = false;
    std::optional<bool> unique;
};

/// Greedy leaf pairing on a tree; the result, when perfect, is the tree's
/// unique perfect matching. nullopt when no perfect matching exists.
std::optional<MatchingCertificate> unique_perfect_matching(const Graph& t);

/// |a_{2k}| == m_k and odd coefficients vanish, for a forest.
bool forest_coefficient_identity(const Graph& t);

} // namespace palin

#endif
