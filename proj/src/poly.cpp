#include "palin/poly.hpp"

#include <algorithm>
#include <sstream>

namespace palin {

void Poly::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
}

Poly Poly::monomial(BigInt lead, int deg) {
    if (lead == 0) return zero();
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1, BigInt(0));
    c[0] = std::move(lead);
    return Poly(std::move(c));
}

Poly operator+(const Poly& p, const Poly& q) {
    const auto &a = p.coeffs(), &b = q.coeffs();
    std::vector<BigInt> out(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[out.size() - a.size() + i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[out.size() - b.size() + i] += b[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& p) {
    std::vector<BigInt> out = p.coeffs();
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly::zero();
    const auto &a = p.coeffs(), &b = q.coeffs();
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return Poly(std::move(out));
}

Poly pow(const Poly& p, unsigned e) {
    Poly acc = Poly::one();
    Poly base = p;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

const char* to_string(PalKind k) {
    switch (k) {
    case PalKind::Palindromic: return "palindromic";
    case PalKind::Antipalindromic: return "antipalindromic";
    default: return "neither";
    }
}

PalindromeClass classify(const Poly& p) {
    if (p.is_zero()) throw zero_polynomial("classify: zero polynomial");
    const auto& a = p.coeffs();
    const std::size_t n = a.size() - 1;
    bool pal = true, anti = true, absolute = true;
    for (std::size_t i = 0; i <= n; ++i) {
        const BigInt &x = a[i], &y = a[n - i];
        if (x != y) pal = false;
        if (x != -y) anti = false;
        if (abs(x) != abs(y)) absolute = false;
    }
    PalindromeClass out;
    if (pal) out.kind = PalKind::Palindromic;
    else if (anti) out.kind = PalKind::Antipalindromic;
    else out.kind = PalKind::Neither;
    out.absolute = absolute;
    return out;
}

std::pair<bool, bool> reverse_check(const Poly& p) {
    if (p.is_zero()) throw zero_polynomial("reverse_check: zero polynomial");
    // x^n p(1/x) as an honest polynomial build: sum a_i x^i for a_i at x^{n-i}
    const auto& a = p.coeffs();
    const int n = p.degree();
    Poly rev = Poly::zero();
    for (int i = 0; i <= n; ++i) rev = rev + Poly::monomial(a[static_cast<std::size_t>(i)], i);
    return {p == rev, p == -rev};
}

Poly substitute_hairing(const Poly& p, int n, int k) {
    if (k < 1) throw domain_error("substitute_hairing: k must be >= 1");
    if (p.degree() != n)
        throw degree_mismatch("substitute_hairing: degree " + std::to_string(p.degree()) +
                              " does not match n=" + std::to_string(n));
    if (!p.monic()) throw domain_error("substitute_hairing: polynomial must be monic");
    // sum_i a_i x^{(k-1)n + i} (x^2 - k)^{n-i}
    const auto& a = p.coeffs();
    Poly quad(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-k)});
    std::vector<Poly> quad_pow(static_cast<std::size_t>(n) + 1);
    quad_pow[0] = Poly::one();
    for (int e = 1; e <= n; ++e) quad_pow[static_cast<std::size_t>(e)] = quad_pow[static_cast<std::size_t>(e - 1)] * quad;
    Poly out = Poly::zero();
    for (int i = 0; i <= n; ++i) {
        const BigInt& ai = a[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        out = out + Poly::monomial(ai, (k - 1) * n + i) * quad_pow[static_cast<std::size_t>(n - i)];
    }
    return out;
}

bool coefficient_reflection_check(const Poly& p, int half_degree) {
    if (p.degree() != 2 * half_degree)
        throw degree_mismatch("coefficient_reflection_check: degree " + std::to_string(p.degree()) +
                              " is not 2*" + std::to_string(half_degree));
    const auto& a = p.coeffs();
    const int m = 2 * half_degree;
    for (int i = 0; i <= m; ++i) {
        BigInt rhs = a[static_cast<std::size_t>(m - i)];
        if ((half_degree + i) % 2 != 0) rhs = -rhs;
        if (a[static_cast<std::size_t>(i)] != rhs) return false;
    }
    return true;
}

std::string to_display(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto& a = p.coeffs();
    const int n = p.degree();
    bool first = true;
    for (int i = 0; i <= n; ++i) {
        const BigInt& c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const int e = n - i;
        if (c > 0 && !first) os << "+";
        if (c == -1 && e > 0) os << "-";
        else if ((c != 1 || e == 0)) os << c.str();
        if (e > 0) {
            os << "λ";
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> to_decimal_strings(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

} // namespace palin
