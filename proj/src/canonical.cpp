#include "palin/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace palin {

namespace {

std::uint64_t cell_mask(const std::vector<int>& cell) {
    std::uint64_t m = 0;
    for (int v : cell) m |= std::uint64_t{1} << v;
    return m;
}

using Cells = std::vector<std::vector<int>>;

struct Searcher {
    int n;
    const std::vector<std::uint64_t>& rows;
    std::vector<std::uint64_t> best; // packed code, empty until first leaf
    std::vector<int> best_perm;

    // Split cells by neighbor counts until the partition is equitable.
    // Subcells are ordered by ascending count, which is label-independent,
    // so isomorphic graphs walk structurally identical partitions.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
                std::uint64_t splitter = cell_mask(cells[si]);
                for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                    if (cells[ci].size() < 2) continue;
                    std::map<int, std::vector<int>> groups;
                    for (int v : cells[ci])
                        groups[std::popcount(rows[static_cast<std::size_t>(v)] & splitter)].push_back(v);
                    if (groups.size() > 1) {
                        Cells sub;
                        for (auto& [cnt, grp] : groups) sub.push_back(std::move(grp));
                        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                                     std::make_move_iterator(sub.begin()),
                                     std::make_move_iterator(sub.end()));
                        changed = true;
                    }
                }
            }
        }
    }

    // A cell whose vertices have identical rows outside the cell and whose
    // induced subgraph is empty or complete contributes the same code under
    // any internal ordering, so there is no need to branch on it.
    bool homogeneous(const std::vector<int>& cell) const {
        std::uint64_t cm = cell_mask(cell);
        std::uint64_t out0 = rows[static_cast<std::size_t>(cell[0])] & ~cm;
        for (int v : cell)
            if ((rows[static_cast<std::size_t>(v)] & ~cm) != out0) return false;
        bool all_empty = true, all_full = true;
        for (int v : cell) {
            std::uint64_t inside = rows[static_cast<std::size_t>(v)] & cm;
            if (inside != 0) all_empty = false;
            if (inside != (cm & ~(std::uint64_t{1} << v))) all_full = false;
        }
        return all_empty || all_full;
    }

    void leaf(const Cells& cells) {
        std::vector<int> perm;
        perm.reserve(static_cast<std::size_t>(n));
        for (const auto& c : cells) perm.push_back(c[0]);
        // upper-triangle bits in graph6 column order, packed big-endian so
        // that word comparison is bit-lexicographic
        std::vector<std::uint64_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        std::size_t k = 0;
        for (int j = 1; j < n; ++j) {
            std::uint64_t col = rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            for (int i = 0; i < j; ++i, ++k)
                if (col >> perm[static_cast<std::size_t>(i)] & 1)
                    code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
        if (best.empty() || code < best || (code == best && best_perm.empty())) {
            best = std::move(code);
            best_perm = std::move(perm);
        }
    }

    void search(Cells cells) {
        refine(cells);
        std::size_t ti = 0;
        while (true) {
            while (ti < cells.size() && cells[ti].size() == 1) ++ti;
            if (ti == cells.size()) {
                leaf(cells);
                return;
            }
            if (!homogeneous(cells[ti])) break;
            // replace by singletons in index order; equitability is preserved
            Cells sub;
            for (int v : cells[ti]) sub.push_back({v});
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ti));
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ti),
                         std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
        }
        std::vector<int> target = cells[ti];
        for (int v : target) {
            Cells child = cells;
            std::vector<int> rest;
            for (int u : target)
                if (u != v) rest.push_back(u);
            child[ti] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(ti) + 1, std::move(rest));
            search(std::move(child));
        }
    }
};

} // namespace

std::vector<int> canonical_permutation(int n, const std::vector<std::uint64_t>& rows) {
    if (n == 0) return {};
    Searcher s{n, rows, {}, {}};
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    s.search({all});
    return s.best_perm;
}

std::vector<std::uint64_t> apply_permutation(int n, const std::vector<std::uint64_t>& rows,
                                             const std::vector<int>& perm) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
        std::uint64_t row = rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
        for (int q = 0; q < n; ++q)
            if (row >> perm[static_cast<std::size_t>(q)] & 1)
                out[static_cast<std::size_t>(p)] |= std::uint64_t{1} << q;
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw order_too_large("canonical_form limited to n <= 64, got " + std::to_string(n));
    auto rows = g.dense_rows();
    auto perm = canonical_permutation(n, rows);
    auto canon = apply_permutation(n, rows, perm);
    Graph relabeled(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (canon[static_cast<std::size_t>(p)] >> q & 1) relabeled.add_edge(p, q);
    return CanonicalForm{std::move(perm), write_graph6(relabeled)};
}

std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace palin
