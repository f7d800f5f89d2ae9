#include "palin/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "palin/canonical.hpp"

namespace palin {

BitGraph to_bitgraph(const Graph& g) {
    BitGraph b;
    b.n = g.order();
    b.rows = g.dense_rows();
    return b;
}

Graph to_graph(const BitGraph& b) {
    Graph g(b.n);
    for (int v = 0; v < b.n; ++v) {
        std::uint64_t row =
            (v >= 63) ? 0 : (b.rows[static_cast<std::size_t>(v)] >> (v + 1) << (v + 1));
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            g.add_edge(v, u);
        }
    }
    return g;
}

BitGraph canonical_bitgraph(const BitGraph& b) {
    auto perm = canonical_permutation(b.n, b.rows);
    return BitGraph{b.n, apply_permutation(b.n, b.rows, perm)};
}

bool bitgraph_connected(const BitGraph& b) {
    if (b.n == 0) return false;
    std::uint64_t seen = 1, frontier = 1;
    std::uint64_t all = (b.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << b.n) - 1);
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= b.rows[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

bool bitgraph_triangle_free(const BitGraph& b) {
    for (int v = 0; v < b.n; ++v) {
        std::uint64_t nb =
            (v >= 63) ? 0 : (b.rows[static_cast<std::size_t>(v)] >> (v + 1) << (v + 1));
        std::uint64_t row = nb;
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            if (b.rows[static_cast<std::size_t>(u)] & nb) return false;
        }
    }
    return true;
}

namespace {

BitGraph delete_vertex(const BitGraph& b, int w) {
    BitGraph out;
    out.n = b.n - 1;
    out.rows.assign(static_cast<std::size_t>(out.n), 0);
    int to = 0;
    for (int v = 0; v < b.n; ++v) {
        if (v == w) continue;
        std::uint64_t row = b.rows[static_cast<std::size_t>(v)];
        std::uint64_t low = row & ((std::uint64_t{1} << w) - 1);
        std::uint64_t high = (w == 63) ? 0 : (row >> (w + 1) << w);
        out.rows[static_cast<std::size_t>(to++)] = low | high;
    }
    return out;
}

} // namespace

std::vector<BitGraph> expand_parent(const BitGraph& parent, bool triangle_free_only) {
    const int k = parent.n + 1;
    const int nv = k - 1; // index of the new vertex
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<BitGraph> out;
    const std::uint64_t subsets = std::uint64_t{1} << parent.n;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        if (triangle_free_only) {
            bool bad = false;
            std::uint64_t t = s;
            while (t && !bad) {
                int u = std::countr_zero(t);
                t &= t - 1;
                if (parent.rows[static_cast<std::size_t>(u)] & s) bad = true;
            }
            if (bad) continue;
        }
        BitGraph child;
        child.n = k;
        child.rows = parent.rows;
        child.rows.push_back(s);
        std::uint64_t t = s;
        while (t) {
            int u = std::countr_zero(t);
            t &= t - 1;
            child.rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << nv;
        }
        auto perm = canonical_permutation(k, child.rows);
        int w = perm[static_cast<std::size_t>(k - 1)]; // vertex at the last canonical position
        // accept iff deleting the new vertex matches deleting the
        // canonically-last vertex; the parent is already canonical
        if (w != nv) {
            BitGraph del = canonical_bitgraph(delete_vertex(child, w));
            if (del.rows != parent.rows) continue;
        }
        BitGraph canon{k, apply_permutation(k, child.rows, perm)};
        if (seen.insert(canon.rows).second) out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitGraph> expand_level(const std::vector<BitGraph>& parents, bool triangle_free_only,
                                   int workers) {
    std::vector<std::vector<BitGraph>> buckets(parents.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < parents.size(); ++i)
            buckets[i] = expand_parent(parents[i], triangle_free_only);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(parents.size()); ++i)
            buckets[static_cast<std::size_t>(i)] =
                expand_parent(parents[static_cast<std::size_t>(i)], triangle_free_only);
    }
    std::vector<BitGraph> out;
    for (auto& b : buckets)
        out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitGraph> all_graphs_level(int n, bool triangle_free_only, int workers) {
    if (n < 1) throw order_too_large("enumeration needs n >= 1");
    if (n > 12) throw order_too_large("builtin generator limited to n <= 12");
    std::vector<BitGraph> level{BitGraph{1, {0}}};
    for (int k = 2; k <= n; ++k) level = expand_level(level, triangle_free_only, workers);
    return level;
}

std::vector<Graph> enumerate_all(int n, int workers) {
    std::vector<Graph> out;
    for (const auto& b : all_graphs_level(n, false, workers)) out.push_back(to_graph(b));
    return out;
}

std::vector<Graph> enumerate_connected(int n, int workers) {
    std::vector<Graph> out;
    for (const auto& b : all_graphs_level(n, false, workers))
        if (bitgraph_connected(b)) out.push_back(to_graph(b));
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw order_too_large("enumerate_trees needs n >= 1");
    if (n > 20) throw order_too_large("enumerate_trees limited to n <= 20");
    std::vector<BitGraph> level{BitGraph{1, {0}}};
    for (int k = 2; k <= n; ++k) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<BitGraph> next;
        for (const auto& t : level) {
            for (int v = 0; v < t.n; ++v) {
                BitGraph child;
                child.n = k;
                child.rows = t.rows;
                child.rows.push_back(std::uint64_t{1} << v);
                child.rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (k - 1);
                BitGraph canon = canonical_bitgraph(child);
                if (seen.insert(canon.rows).second) next.push_back(std::move(canon));
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& b : level) out.push_back(to_graph(b));
    return out;
}

} // namespace palin
