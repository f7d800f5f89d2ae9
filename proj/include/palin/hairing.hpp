#ifndef PALIN_HAIRING_HPP
#define PALIN_HAIRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "palin/graph.hpp"
#include "palin/poly.hpp"

namespace palin {

/// Attach k pendant vertices to every vertex of g. Original vertices keep
/// indices 0..n-1; the j-th pendant of vertex i is j*n + i, so for k = 1
/// the adjacency matrix has block form [[A, I], [I, 0]].
Graph hair_k(const Graph& g, int k);

struct HairCertificate {
    std::vector<int> core;    // sorted core vertices
    std::vector<int> hair_of; // hair_of[v] = pendant of core vertex v, else -1
    Graph core_graph;         // induced on the core, renumbered
};

struct DehairResult {
    std::optional<HairCertificate> cert;
    std::string obstruction; // human-readable reason when recognition fails
    bool ok() const { return cert.has_value(); }
};

/// Linear-time recognition of 1-hairings; disconnected inputs are handled
/// per component, K2 components break the tie toward the lower index.
DehairResult dehair(const Graph& g);

/// The class H(g) must have: always absolutely palindromic; palindromic
/// iff g bipartite with even order, antipalindromic iff bipartite odd.
PalindromeClass predict_class_of_hairing(const Graph& g);

/// For bipartite g: the parts of H(g) have equal size.
bool hairing_bipartition_balance(const Graph& g);

struct SymplecticReport {
    bool block_ok = false;          // A' really is [[A, I], [I, 0]]
    bool quasisymplectic_ok = false; // A' J A' == -J
    bool inverse_ok = false;        // A' (J A' J) == I
    bool det_ok = false;            // det(A') == (-1)^n
    bool all() const { return block_ok && quasisymplectic_ok && inverse_ok && det_ok; }
};

SymplecticReport symplectic_check(const Graph& g); // n <= 32

} // namespace palin

#endif
