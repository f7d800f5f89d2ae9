#ifndef PALIN_CANONICAL_HPP
#define PALIN_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "palin/graph.hpp"

namespace palin {

/// Canonical labeling via equitable degree refinement plus backtracking
/// over cell orderings; the code is the lexicographically least graph6
/// string over the explored labelings. Equal codes iff isomorphic.
struct CanonicalForm {
    std::vector<int> label; // label[p] = original vertex at canonical position p
    std::string code;       // graph6 of the relabeled graph
};

CanonicalForm canonical_form(const Graph& g); // n <= 64
std::string canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Low-level entry point on adjacency row bitmasks (n <= 64), used by the
/// enumeration kernels. Returns the canonical position->vertex map.
std::vector<int> canonical_permutation(int n, const std::vector<std::uint64_t>& rows);

/// Rows of the relabeled graph: out[p] bit q set iff perm[p] ~ perm[q].
std::vector<std::uint64_t> apply_permutation(int n, const std::vector<std::uint64_t>& rows,
                                             const std::vector<int>& perm);

} // namespace palin

#endif
