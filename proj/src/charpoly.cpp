#include "palin/charpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

#include "palin/matchings.hpp"

namespace palin {

namespace {

// int64 with overflow detection; overflow punts to the big-integer path
struct CheckedI64 {
    long long v = 0;
    CheckedI64() = default;
    CheckedI64(long long x) : v(x) {}
    friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("i64 add");
        return r;
    }
    friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw std::overflow_error("i64 mul");
        return r;
    }
    friend CheckedI64 operator-(CheckedI64 a) {
        if (a.v == INT64_MIN) throw std::overflow_error("i64 neg");
        return -a.v;
    }
    CheckedI64& operator+=(CheckedI64 b) { return *this = *this + b; }
};

template <class I>
std::vector<I> berkowitz(const std::vector<std::vector<I>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<I> c{I(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<I> t(static_cast<std::size_t>(m) + 1, I(0));
        t[0] = I(1);
        t[1] = -a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(m - 1)];
        if (m >= 2) {
            std::vector<I> w(static_cast<std::size_t>(m - 1));
            for (int i = 0; i < m - 1; ++i)
                w[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1)];
            for (int j = 1; j <= m - 1; ++j) {
                I dot(0);
                for (int i = 0; i < m - 1; ++i)
                    dot += a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
                t[static_cast<std::size_t>(j) + 1] = -dot;
                if (j < m - 1) {
                    std::vector<I> w2(static_cast<std::size_t>(m - 1), I(0));
                    for (int r = 0; r < m - 1; ++r)
                        for (int k = 0; k < m - 1; ++k)
                            w2[static_cast<std::size_t>(r)] +=
                                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)];
                    w = std::move(w2);
                }
            }
        }
        std::vector<I> cn(static_cast<std::size_t>(m) + 1, I(0));
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < c.size() && i + j <= static_cast<std::size_t>(m); ++j)
                cn[i + j] += t[i] * c[j];
        c = std::move(cn);
    }
    return c;
}

template <class I>
std::vector<std::vector<I>> adjacency_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<I>> a(static_cast<std::size_t>(n),
                                  std::vector<I>(static_cast<std::size_t>(n), I(0)));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = I(1);
    return a;
}

} // namespace

Poly char_poly(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw order_too_large("char_poly limited to n <= 64, got " + std::to_string(n));
    try {
        auto c = berkowitz(adjacency_matrix<CheckedI64>(g));
        std::vector<BigInt> out;
        out.reserve(c.size());
        for (auto x : c) out.emplace_back(x.v);
        return Poly(std::move(out));
    } catch (const std::overflow_error&) {
        return char_poly_matrix(adjacency_matrix<BigInt>(g));
    }
}

Poly char_poly_matrix(const std::vector<std::vector<BigInt>>& a) {
    return Poly(berkowitz(a));
}

Poly char_poly_sachs(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw order_too_large("char_poly_sachs limited to n <= 12, got " + std::to_string(n));
    auto rows = g.dense_rows();
    std::vector<long long> acc(static_cast<std::size_t>(n) + 1, 0);
    acc[0] = 1; // the empty subgraph

    // Components are found in increasing order of their smallest vertex; a
    // completed component set is tallied at every recursion node. Cycles are
    // anchored at their smallest vertex and walked in one direction only
    // (first internal vertex < last), so each subgraph is counted once.
    struct Enumerator {
        const std::vector<std::uint64_t>& rows;
        std::uint64_t all;
        std::vector<long long>& acc;

        void tally(int i, int c, int s) {
            long long term = (((i - c) % 2) ? -1LL : 1LL) * (1LL << s);
            acc[static_cast<std::size_t>(i)] += term;
        }

        void step(std::uint64_t covered, int i, int c, int s) {
            std::uint64_t free = ~covered & all;
            if (free == 0) return;
            int v = std::countr_zero(free);
            std::uint64_t vb = std::uint64_t{1} << v;
            step(covered | vb, i, c, s);
            std::uint64_t nb = rows[static_cast<std::size_t>(v)] & free & ~vb;
            std::uint64_t nbe = nb;
            while (nbe) {
                int u = std::countr_zero(nbe);
                nbe &= nbe - 1;
                tally(i + 2, c + 1, s);
                step(covered | vb | (std::uint64_t{1} << u), i + 2, c + 1, s);
            }
            std::uint64_t nbc = nb;
            while (nbc) {
                int x1 = std::countr_zero(nbc);
                nbc &= nbc - 1;
                cycle(covered | vb | (std::uint64_t{1} << x1), v, x1, x1, 2, i, c, s);
            }
        }

        void cycle(std::uint64_t used, int v, int x1, int xt, int len, int i, int c, int s) {
            if (len >= 3 && (rows[static_cast<std::size_t>(xt)] >> v & 1) && x1 < xt) {
                tally(i + len, c + 1, s + 1);
                step(used, i + len, c + 1, s + 1);
            }
            std::uint64_t nxt = rows[static_cast<std::size_t>(xt)] & ~used & all;
            while (nxt) {
                int u = std::countr_zero(nxt);
                nxt &= nxt - 1;
                if (u < v) continue;
                cycle(used | (std::uint64_t{1} << u), v, x1, u, len + 1, i, c, s);
            }
        }
    };

    std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    Enumerator en{rows, all, acc};
    en.step(0, 0, 0, 0);

    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt ai(acc[static_cast<std::size_t>(i)]);
        if (i % 2 != 0) ai = -ai;
        coeffs[static_cast<std::size_t>(i)] = ai;
    }
    return Poly(std::move(coeffs));
}

Poly tree_char_poly(const Graph& t) {
    if (!is_tree(t)) throw not_a_tree("tree_char_poly: input is not a tree");
    auto tally = count_k_matchings_forest(t);
    const int n = t.order();
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (std::size_t k = 0; k < tally.m.size(); ++k) {
        BigInt c = tally.m[k];
        if (k % 2 != 0) c = -c;
        coeffs[2 * k] = c;
    }
    return Poly(std::move(coeffs));
}

Spectrum approx_spectrum(const Graph& g, double tol) {
    const int n = g.order();
    if (n > 64) throw order_too_large("approx_spectrum limited to n <= 64");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    Spectrum out;
    out.tolerance = tol;
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

bool spectrum_reciprocal(const Spectrum& s) {
    std::vector<double> recip;
    recip.reserve(s.eigenvalues.size());
    for (double lam : s.eigenvalues) {
        if (std::abs(lam) < 1e-9) return false; // zero eigenvalue has no reciprocal
        recip.push_back(1.0 / lam);
    }
    std::sort(recip.begin(), recip.end());
    for (std::size_t k = 0; k < recip.size(); ++k)
        if (std::abs(recip[k] - s.eigenvalues[k]) > 1e-6 * std::max(1.0, std::abs(s.eigenvalues[k])))
            return false;
    return true;
}

} // namespace palin
