#ifndef PALIN_TENSOR_HPP
#define PALIN_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "palin/graph.hpp"
#include "palin/poly.hpp"

namespace palin {

/// Kronecker product: vertex (u,u') at index u*|V'| + u', edge iff both
/// projections are edges.
Graph tensor_product(const Graph& g1, const Graph& g2);

/// Monic polynomial whose roots are all pairwise products of the roots of
/// p1 and p2, computed exactly on the Kronecker product of the companion
/// matrices.
Poly product_charpoly(const Poly& p1, const Poly& p2);

struct TensorSplit {
    Graph even_component; // contains product vertex (0,0)
    Graph odd_component;
    std::vector<int> even_vertices, odd_vertices; // product indices, sorted
    Bipartition even_parts, odd_parts;
};

/// Both factors connected bipartite: the two components of the product.
TensorSplit bipartite_split(const Graph& g1, const Graph& g2);

struct HairRatio {
    std::size_t hair_count = 0;
    std::size_t order = 0;
};

HairRatio hair_ratio(const Graph& g);

struct FamilyEmission {
    Graph graph;
    Poly chi;
    PalindromeClass cls;
    bool bald = false;
    HairRatio ratio;
    std::string code; // graph6
};

/// For each tree, emit one verified connected component of seed (x) tree.
/// Every emission is re-checked (connected, bipartite, palindromic,
/// non-hairing); a check failure throws emission_failed_verification.
std::vector<FamilyEmission> family_generator(const Graph& seed, const std::vector<Graph>& trees,
                                             std::size_t limit);

} // namespace palin

#endif
