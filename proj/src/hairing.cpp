#include "palin/hairing.hpp"

#include <algorithm>

#include "palin/charpoly.hpp"

namespace palin {

Graph hair_k(const Graph& g, int k) {
    if (k < 1) throw domain_error("hair_k: k must be >= 1");
    const int n = g.order();
    Graph out((k + 1) * n);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v) out.add_edge(v, u);
    for (int j = 1; j <= k; ++j)
        for (int v = 0; v < n; ++v) out.add_edge(v, j * n + v);
    return out;
}

DehairResult dehair(const Graph& g) {
    const int n = g.order();
    DehairResult out;
    if (n % 2 != 0) {
        out.obstruction = "odd order " + std::to_string(n);
        return out;
    }
    std::vector<int> hair_of(static_cast<std::size_t>(n), -1);
    std::vector<char> is_hair(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v)[0];
        if (g.degree(u) == 1) {
            // K2 component, both pendant: lower index becomes core
            if (v < u) {
                hair_of[static_cast<std::size_t>(v)] = u;
                is_hair[static_cast<std::size_t>(u)] = 1;
            }
            continue;
        }
        if (hair_of[static_cast<std::size_t>(u)] >= 0) {
            out.obstruction = "core vertex " + std::to_string(u) + " has 2 pendant neighbors";
            return out;
        }
        hair_of[static_cast<std::size_t>(u)] = v;
        is_hair[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> core;
    for (int v = 0; v < n; ++v) {
        if (is_hair[static_cast<std::size_t>(v)]) continue;
        if (hair_of[static_cast<std::size_t>(v)] < 0) {
            out.obstruction = (g.degree(v) == 0)
                                  ? "isolated vertex " + std::to_string(v)
                                  : "core vertex " + std::to_string(v) + " has no pendant neighbor";
            return out;
        }
        core.push_back(v);
    }
    HairCertificate cert;
    cert.core = std::move(core);
    cert.hair_of = std::move(hair_of);
    cert.core_graph = induced_subgraph(g, cert.core);
    out.cert = std::move(cert);
    return out;
}

PalindromeClass predict_class_of_hairing(const Graph& g) {
    PalindromeClass out;
    out.absolute = true;
    Bipartition bp = bipartition(g);
    if (!bp.bipartite) {
        out.kind = PalKind::Neither;
        return out;
    }
    out.kind = (g.order() % 2 == 0) ? PalKind::Palindromic : PalKind::Antipalindromic;
    return out;
}

bool hairing_bipartition_balance(const Graph& g) {
    Bipartition bp = bipartition(g);
    if (!bp.bipartite) throw not_bipartite_input("hairing_bipartition_balance: input not bipartite");
    Bipartition hp = bipartition(hair_k(g, 1));
    return hp.bipartite && hp.part_v.size() == hp.part_w.size();
}

namespace {

using Mat = std::vector<std::vector<BigInt>>;

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat out(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

} // namespace

SymplecticReport symplectic_check(const Graph& g) {
    const int n = g.order();
    if (n > 32) throw order_too_large("symplectic_check limited to n <= 32");
    Graph h = hair_k(g, 1);
    const std::size_t m = static_cast<std::size_t>(2 * n);

    Mat ap(m, std::vector<BigInt>(m, BigInt(0)));
    for (int v = 0; v < 2 * n; ++v)
        for (int u : h.neighbors(v)) ap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;

    SymplecticReport rep;
    rep.block_ok = true;
    for (std::size_t i = 0; i < m && rep.block_ok; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            BigInt expect(0);
            std::size_t un = static_cast<std::size_t>(n);
            if (i < un && j < un) expect = g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
            else if (i < un && j >= un) expect = (j - un == i) ? 1 : 0;
            else if (i >= un && j < un) expect = (i - un == j) ? 1 : 0;
            if (ap[i][j] != expect) {
                rep.block_ok = false;
                break;
            }
        }

    Mat jmat(m, std::vector<BigInt>(m, BigInt(0)));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        jmat[i][i + static_cast<std::size_t>(n)] = 1;
        jmat[i + static_cast<std::size_t>(n)][i] = -1;
    }

    Mat aja = mat_mul(mat_mul(ap, jmat), ap);
    rep.quasisymplectic_ok = true;
    for (std::size_t i = 0; i < m && rep.quasisymplectic_ok; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (aja[i][j] != -jmat[i][j]) {
                rep.quasisymplectic_ok = false;
                break;
            }

    Mat inv = mat_mul(mat_mul(jmat, ap), jmat);
    Mat prod = mat_mul(ap, inv);
    rep.inverse_ok = true;
    for (std::size_t i = 0; i < m && rep.inverse_ok; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (prod[i][j] != BigInt(i == j ? 1 : 0)) {
                rep.inverse_ok = false;
                break;
            }

    // det(A') equals the constant term of det(xI - A') at x = 0 up to the
    // even-dimension sign, which is +1 here
    Poly chi = char_poly_matrix(ap);
    rep.det_ok = chi.coeff(chi.degree()) == BigInt((n % 2 == 0) ? 1 : -1);
    return rep;
}

} // namespace palin
