#ifndef PALIN_POLY_HPP
#define PALIN_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "palin/errors.hpp"

namespace palin {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer polynomial, coefficients stored leading-first
/// [a_0, a_1, ..., a_n] with a_0 != 0; the zero polynomial is empty.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{{BigInt(1)}}; }
    static Poly constant(BigInt v) { return Poly{{std::move(v)}}; }
    static Poly monomial(BigInt lead, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
    /// a_i counted from the leading coefficient (a_0 = leading)
    const BigInt& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool monic() const { return !is_zero() && c_.front() == 1; }

    bool operator==(const Poly& other) const { return c_ == other.c_; }

  private:
    void normalize();
    std::vector<BigInt> c_;
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator-(const Poly& p);
Poly operator*(const Poly& p, const Poly& q);
Poly pow(const Poly& p, unsigned e);

enum class PalKind { Palindromic, Antipalindromic, Neither };

struct PalindromeClass {
    PalKind kind = PalKind::Neither;
    bool absolute = false;
};

const char* to_string(PalKind k);

/// Coefficient-symmetry classification; throws zero_polynomial on zero input.
PalindromeClass classify(const Poly& p);

/// Algebraic route: (p(x) == x^n p(1/x), p(x) == -x^n p(1/x)).
std::pair<bool, bool> reverse_check(const Poly& p);

/// x^{kn} * p(x - k/x) expanded exactly; p monic of degree n, k >= 1.
Poly substitute_hairing(const Poly& p, int n, int k);

/// a_i == (-1)^{n+i} a_{2n-i} for all i, where deg p == 2n.
bool coefficient_reflection_check(const Poly& p, int half_degree);

std::string to_display(const Poly& p);                  // e.g. "λ^4-3λ^2+1"
std::vector<std::string> to_decimal_strings(const Poly& p);

} // namespace palin

#endif
