#ifndef PALIN_CHARPOLY_HPP
#define PALIN_CHARPOLY_HPP

#include <vector>

#include "palin/graph.hpp"
#include "palin/poly.hpp"

namespace palin {

/// Exact characteristic polynomial det(xI - A) by the division-free
/// Berkowitz recurrence; int64 fast path with overflow-checked fallback.
Poly char_poly(const Graph& g); // n <= 64

/// Char poly of an arbitrary square integer matrix (same recurrence).
Poly char_poly_matrix(const std::vector<std::vector<BigInt>>& a);

/// Independent oracle: coefficients from the signed 2^s sum over all
/// subgraphs whose components are single edges or cycles. Exponential.
Poly char_poly_sachs(const Graph& g); // n <= 12

/// Trees only: even coefficients are signed k-matching counts.
Poly tree_char_poly(const Graph& t);

struct Spectrum {
    std::vector<double> eigenvalues; // ascending
    double tolerance = 1e-9;
};

/// Floating-point adjacency eigenvalues; diagnostics only.
Spectrum approx_spectrum(const Graph& g, double tol = 1e-9); // n <= 64

/// True iff the eigenvalue multiset pairs off with its reciprocals.
bool spectrum_reciprocal(const Spectrum& s);

} // namespace palin

#endif
