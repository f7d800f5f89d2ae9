#include "palin/matchings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "palin/charpoly.hpp"

namespace palin {

namespace {

// tallies in ascending k: t[k] = number of k-matchings
using Tally = std::vector<BigInt>;

Tally tally_mul(const Tally& a, const Tally& b) {
    Tally out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

MatchingTally count_k_matchings_enum(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw order_too_large("matching enumeration limited to n <= 24, got " + std::to_string(n));
    auto rows = g.dense_rows();
    std::uint64_t all = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
    std::vector<BigInt> m(static_cast<std::size_t>(n / 2) + 1, BigInt(0));

    // branch on the lowest uncovered vertex: leave it unmatched, or match
    // it along each incident free edge
    auto rec = [&](auto&& self, std::uint64_t covered, int k) -> void {
        std::uint64_t free = ~covered & all;
        if (free == 0) {
            m[static_cast<std::size_t>(k)] += 1;
            return;
        }
        int v = std::countr_zero(free);
        std::uint64_t vb = std::uint64_t{1} << v;
        self(self, covered | vb, k);
        std::uint64_t nb = rows[static_cast<std::size_t>(v)] & free & ~vb;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            self(self, covered | vb | (std::uint64_t{1} << u), k + 1);
        }
    };
    rec(rec, 0, 0);
    return MatchingTally{std::move(m)};
}

MatchingTally count_k_matchings_forest(const Graph& g) {
    if (!is_forest(g)) throw not_a_forest("count_k_matchings_forest: input has a cycle");
    const int n = g.order();
    Tally total{BigInt(1)};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        // iterative post-order so million-vertex paths do not blow the stack
        std::vector<std::pair<int, int>> order; // (vertex, parent)
        std::vector<std::pair<int, int>> stack{{root, -1}};
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            order.emplace_back(v, parent);
            for (int u : g.neighbors(v))
                if (u != parent) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.emplace_back(u, v);
                }
        }
        // unmatched[v]: v not matched to a child; matched[v]: v matched below
        std::vector<Tally> unmatched(static_cast<std::size_t>(n)), matched(static_cast<std::size_t>(n));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto [v, parent] = *it;
            Tally a{BigInt(1)}, b{BigInt(0)};
            for (int u : g.neighbors(v)) {
                if (u == parent) continue;
                Tally both(std::max(unmatched[static_cast<std::size_t>(u)].size(),
                                    matched[static_cast<std::size_t>(u)].size()),
                           BigInt(0));
                for (std::size_t i = 0; i < unmatched[static_cast<std::size_t>(u)].size(); ++i)
                    both[i] += unmatched[static_cast<std::size_t>(u)][i];
                for (std::size_t i = 0; i < matched[static_cast<std::size_t>(u)].size(); ++i)
                    both[i] += matched[static_cast<std::size_t>(u)][i];
                Tally nb = tally_mul(b, both);
                // match v-u: consumes one edge, u must be unmatched below
                Tally add = tally_mul(a, unmatched[static_cast<std::size_t>(u)]);
                if (nb.size() < add.size() + 1) nb.resize(add.size() + 1, BigInt(0));
                for (std::size_t i = 0; i < add.size(); ++i) nb[i + 1] += add[i];
                b = std::move(nb);
                a = tally_mul(a, both);
            }
            unmatched[static_cast<std::size_t>(v)] = std::move(a);
            matched[static_cast<std::size_t>(v)] = std::move(b);
        }
        Tally comp(std::max(unmatched[static_cast<std::size_t>(root)].size(),
                            matched[static_cast<std::size_t>(root)].size()),
                   BigInt(0));
        for (std::size_t i = 0; i < unmatched[static_cast<std::size_t>(root)].size(); ++i)
            comp[i] += unmatched[static_cast<std::size_t>(root)][i];
        for (std::size_t i = 0; i < matched[static_cast<std::size_t>(root)].size(); ++i)
            comp[i] += matched[static_cast<std::size_t>(root)][i];
        total = tally_mul(total, comp);
    }
    total.resize(static_cast<std::size_t>(n / 2) + 1, BigInt(0));
    return MatchingTally{std::move(total)};
}

MatchingTally count_k_matchings(const Graph& g) {
    if (is_forest(g)) return count_k_matchings_forest(g);
    return count_k_matchings_enum(g);
}

BigInt count_perfect_matchings(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw order_too_large("count_perfect_matchings limited to n <= 24");
    if (n % 2 != 0) return 0;
    auto rows = g.dense_rows();
    std::uint64_t all = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
    long long count = 0;
    auto rec = [&](auto&& self, std::uint64_t covered) -> void {
        std::uint64_t free = ~covered & all;
        if (free == 0) {
            ++count;
            return;
        }
        int v = std::countr_zero(free);
        std::uint64_t vb = std::uint64_t{1} << v;
        std::uint64_t nb = rows[static_cast<std::size_t>(v)] & free & ~vb;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            self(self, covered | vb | (std::uint64_t{1} << u));
        }
    };
    rec(rec, 0);
    return BigInt(count);
}

std::optional<MatchingCertificate> unique_perfect_matching(const Graph& t) {
    if (!is_tree(t)) throw not_a_tree("unique_perfect_matching: input is not a tree");
    const int n = t.order();
    if (n % 2 != 0) return std::nullopt;
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::queue<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }
    MatchingCertificate cert;
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        if (removed[static_cast<std::size_t>(v)]) continue;
        int partner = -1;
        for (int u : t.neighbors(v))
            if (!removed[static_cast<std::size_t>(u)]) partner = u;
        if (partner < 0) return std::nullopt; // isolated leftover vertex
        cert.edges.emplace_back(std::min(v, partner), std::max(v, partner));
        removed[static_cast<std::size_t>(v)] = removed[static_cast<std::size_t>(partner)] = 1;
        for (int u : t.neighbors(partner)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            if (--deg[static_cast<std::size_t>(u)] == 1) leaves.push(u);
            else if (deg[static_cast<std::size_t>(u)] == 0) return std::nullopt;
        }
    }
    if (cert.edges.size() * 2 != static_cast<std::size_t>(n)) return std::nullopt;
    std::sort(cert.edges.begin(), cert.edges.end());
    cert.perfect = true;
    cert.unique = true; // greedy leaf pairing is forced at every step on a tree
    return cert;
}

bool forest_coefficient_identity(const Graph& t) {
    if (!is_forest(t)) throw not_a_forest("forest_coefficient_identity: input has a cycle");
    auto tally = count_k_matchings_forest(t);
    Poly chi = char_poly(t);
    const int n = t.order();
    for (int i = 0; i <= n; ++i) {
        const BigInt& ai = chi.coeff(i);
        if (i % 2 != 0) {
            if (ai != 0) return false;
        } else if (abs(ai) != tally.m[static_cast<std::size_t>(i / 2)]) {
            return false;
        }
    }
    return true;
}

} // namespace palin
