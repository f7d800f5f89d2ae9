#include "palin/tensor.hpp"

#include <algorithm>

#include "palin/charpoly.hpp"
#include "palin/hairing.hpp"

namespace palin {

Graph tensor_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    Graph out(n1 * n2);
    for (int u = 0; u < n1; ++u)
        for (int v : g1.neighbors(u)) {
            if (v < u) continue;
            for (int up = 0; up < n2; ++up)
                for (int vp : g2.neighbors(up)) {
                    int a = u * n2 + up, b = v * n2 + vp;
                    if (a < b) out.add_edge(a, b);
                }
        }
    return out;
}

namespace {

std::vector<std::vector<BigInt>> companion(const Poly& p) {
    if (!p.monic()) throw domain_error("product_charpoly: factor polynomial must be monic");
    const int n = p.degree();
    std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    for (int i = 1; i < n; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = 1;
    for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] =
            -p.coeff(n - i); // column of negated a_n..a_1
    return c;
}

} // namespace

Poly product_charpoly(const Poly& p1, const Poly& p2) {
    const int n = p1.degree(), m = p2.degree();
    if (n == 0 || m == 0) return Poly::one();
    auto c1 = companion(p1);
    auto c2 = companion(p2);
    std::vector<std::vector<BigInt>> k(static_cast<std::size_t>(n * m),
                                       std::vector<BigInt>(static_cast<std::size_t>(n * m), BigInt(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (c1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                    k[static_cast<std::size_t>(i * m + r)][static_cast<std::size_t>(j * m + s)] =
                        c1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        c2[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
        }
    return char_poly_matrix(k);
}

TensorSplit bipartite_split(const Graph& g1, const Graph& g2) {
    if (!is_connected(g1) || !is_connected(g2))
        throw domain_error("bipartite_split: both factors must be connected");
    Bipartition b1 = bipartition(g1), b2 = bipartition(g2);
    if (!b1.bipartite || !b2.bipartite)
        throw not_bipartite_input("bipartite_split: both factors must be bipartite");
    if (g1.order() < 2 || g2.order() < 2)
        throw domain_error("bipartite_split: factors need order >= 2");

    Graph prod = tensor_product(g1, g2);
    auto comps = connected_components(prod);
    if (comps.size() != 2)
        throw domain_error("bipartite_split: product does not have exactly two components");

    TensorSplit out;
    // the component containing product vertex (0,0) is listed first
    std::size_t first = (std::find(comps[0].begin(), comps[0].end(), 0) != comps[0].end()) ? 0 : 1;
    out.even_vertices = comps[first];
    out.odd_vertices = comps[1 - first];
    out.even_component = induced_subgraph(prod, out.even_vertices);
    out.odd_component = induced_subgraph(prod, out.odd_vertices);
    out.even_parts = bipartition(out.even_component);
    out.odd_parts = bipartition(out.odd_component);
    return out;
}

HairRatio hair_ratio(const Graph& g) {
    return HairRatio{hairs(g).size(), static_cast<std::size_t>(g.order())};
}

std::vector<FamilyEmission> family_generator(const Graph& seed, const std::vector<Graph>& trees,
                                             std::size_t limit) {
    if (!is_connected(seed) || !bipartition(seed).bipartite)
        throw seed_not_palindromic("family seed must be connected and bipartite");
    if (classify(char_poly(seed)).kind != PalKind::Palindromic)
        throw seed_not_palindromic("family seed is not palindromic");

    std::vector<FamilyEmission> out;
    for (const Graph& t : trees) {
        if (out.size() >= limit) break;
        if (!is_tree(t) || classify(char_poly(t)).kind == PalKind::Neither)
            throw domain_error("family factor must be an (anti)palindromic tree "
                               "(a hairing of an even-order tree)");
        TensorSplit split = bipartite_split(seed, t);
        FamilyEmission em;
        em.graph = split.even_component;
        em.chi = char_poly(em.graph);
        em.cls = classify(em.chi);
        em.ratio = hair_ratio(em.graph);
        em.bald = em.ratio.hair_count == 0;
        em.code = write_graph6(em.graph);
        // theorem-backed assertions; a failure here is a finding, not output
        if (!is_connected(em.graph))
            throw emission_failed_verification("family emission is not connected");
        if (!bipartition(em.graph).bipartite)
            throw emission_failed_verification("family emission is not bipartite");
        if (em.cls.kind != PalKind::Palindromic)
            throw emission_failed_verification("family emission is not palindromic");
        if (dehair(em.graph).ok())
            throw emission_failed_verification("family emission is a hairing");
        out.push_back(std::move(em));
    }
    return out;
}

} // namespace palin
