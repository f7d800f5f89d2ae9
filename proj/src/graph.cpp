#include "palin/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>

namespace palin {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw vertex_out_of_range("edge endpoint out of range: {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} with n=" + std::to_string(n));
    if (u == v) throw domain_error("loops are not allowed (vertex " + std::to_string(u) + ")");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw domain_error("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

std::vector<std::uint64_t> Graph::dense_rows() const {
    const int n = order();
    if (n > 64) throw order_too_large("dense view limited to n <= 64, got n=" + std::to_string(n));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : neighbors(v)) rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    return rows;
}

// --- graph6 codec -------------------------------------------------------

namespace {

constexpr const char* kHeaderPrefix = ">>graph6<<";

long long decode_number(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw malformed_header("empty graph6 line", pos);
    unsigned char c0 = static_cast<unsigned char>(s[pos]);
    if (c0 == ':' || c0 == ';') throw sparse6_rejected(pos);
    if (c0 < 63 || c0 > 126) throw malformed_header("byte outside graph6 alphabet", pos);
    if (c0 != 126) {
        ++pos;
        return c0 - 63;
    }
    // long forms: 126 b b b  or  126 126 b b b b b b
    int extra = 3;
    std::size_t start = pos + 1;
    if (start < s.size() && static_cast<unsigned char>(s[start]) == 126) {
        extra = 6;
        ++start;
    }
    long long n = 0;
    for (int i = 0; i < extra; ++i) {
        std::size_t at = start + static_cast<std::size_t>(i);
        if (at >= s.size()) throw malformed_header("truncated order field", at);
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126) throw malformed_header("byte outside graph6 alphabet", at);
        n = (n << 6) | (c - 63);
    }
    if (extra == 3 && n <= 62) throw malformed_header("non-minimal order encoding", pos);
    if (extra == 6 && n <= 258047) throw malformed_header("non-minimal order encoding", pos);
    pos = start + static_cast<std::size_t>(extra);
    return n;
}

} // namespace

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(kHeaderPrefix, 0) == 0) s = s.substr(std::string(kHeaderPrefix).size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();

    std::size_t pos = 0;
    long long n = decode_number(s, pos);
    if (n > 100000) throw order_too_large("graph6 order too large for this tool: " + std::to_string(n));

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() < pos + nbytes) throw malformed_header("truncated edge bits", s.size());
    if (s.size() > pos + nbytes) throw trailing_bits("trailing bytes after edge bits", pos + nbytes);

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t at = pos + static_cast<std::size_t>(k / 6);
            unsigned char c = static_cast<unsigned char>(s[at]);
            if (c < 63 || c > 126) throw malformed_header("byte outside graph6 alphabet", at);
            if ((c - 63) >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    }
    // padding bits of the last byte must be zero
    if (nbits % 6 != 0) {
        std::size_t at = pos + nbytes - 1;
        unsigned char c = static_cast<unsigned char>(s[at]) - 63;
        unsigned mask = (1u << (6 - nbits % 6)) - 1u;
        if (c & mask) throw non_canonical_padding("nonzero padding bits", at);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > 100000) throw order_too_large("refusing to encode order " + std::to_string(n));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, static_cast<int>(j)) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// --- structural predicates ---------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> members;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            members.push_back(v);
            for (int u : g.neighbors(v))
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = static_cast<int>(out.size());
                    q.push(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    // BFS from increasing roots already orders components by smallest member
    return out;
}

Bipartition bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    Bipartition out;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0; // vertex 0 of each component lands in part V
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] < 0) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(u)] = v;
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    q.push(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    // odd closed walk: v up to the common ancestor, back down to u
                    std::vector<int> up_v, up_u;
                    int a = v, b = u;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
                        up_v.push_back(a);
                        a = parent[static_cast<std::size_t>(a)];
                    }
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
                        up_u.push_back(b);
                        b = parent[static_cast<std::size_t>(b)];
                    }
                    while (a != b) {
                        up_v.push_back(a);
                        up_u.push_back(b);
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                    }
                    out.bipartite = false;
                    out.odd_cycle = up_v;
                    out.odd_cycle.push_back(a);
                    out.odd_cycle.insert(out.odd_cycle.end(), up_u.rbegin(), up_u.rend());
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    for (int v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? out.part_v : out.part_w).push_back(v);
    return out;
}

std::vector<int> hairs(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    // convention: a tree has at least one vertex
    return g.order() >= 1 && is_connected(g) &&
           g.edge_count() == static_cast<std::size_t>(g.order()) - 1;
}

bool is_forest(const Graph& g) {
    auto comps = connected_components(g);
    return g.edge_count() + comps.size() == static_cast<std::size_t>(g.order());
}

bool triangle_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        const auto& nv = g.neighbors(v);
        for (int u : nv) {
            if (u <= v) continue;
            const auto& nu = g.neighbors(u);
            // sorted intersection
            std::size_t i = 0, j = 0;
            while (i < nv.size() && j < nu.size()) {
                if (nv[i] == nu[j]) return false;
                if (nv[i] < nu[j]) ++i;
                else ++j;
            }
        }
    }
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> idx(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= g.order())
            throw vertex_out_of_range("induced_subgraph: vertex " + std::to_string(v));
        idx[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Graph out(static_cast<int>(sorted.size()));
    for (int v : sorted)
        for (int u : g.neighbors(v))
            if (u > v && idx[static_cast<std::size_t>(u)] >= 0)
                out.add_edge(idx[static_cast<std::size_t>(v)], idx[static_cast<std::size_t>(u)]);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (int v = 0; v < a.order(); ++v)
        for (int u : a.neighbors(v))
            if (u > v) out.add_edge(v, u);
    for (int v = 0; v < b.order(); ++v)
        for (int u : b.neighbors(v))
            if (u > v) out.add_edge(a.order() + v, a.order() + u);
    return out;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u) g.add_edge(v, u);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

} // namespace palin
