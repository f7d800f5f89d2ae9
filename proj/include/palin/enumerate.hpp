#ifndef PALIN_ENUMERATE_HPP
#define PALIN_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "palin/graph.hpp"

namespace palin {

/// Compact adjacency used by the enumeration kernels; rows are bitmasks.
struct BitGraph {
    int n = 0;
    std::vector<std::uint64_t> rows;

    bool operator==(const BitGraph& o) const { return n == o.n && rows == o.rows; }
    bool operator<(const BitGraph& o) const { return rows < o.rows; }
};

BitGraph to_bitgraph(const Graph& g);
Graph to_graph(const BitGraph& b);
BitGraph canonical_bitgraph(const BitGraph& b);
bool bitgraph_connected(const BitGraph& b);
bool bitgraph_triangle_free(const BitGraph& b);

/// Children of one parent in the vertex-extension generation order: the
/// parent must be in canonical form; every isomorphism class of order
/// parent.n+1 is produced by exactly one (parent, child) pair across the
/// whole level. Children come out canonical and sorted.
std::vector<BitGraph> expand_parent(const BitGraph& parent, bool triangle_free_only);

/// One full level; serial when workers <= 1, OpenMP otherwise, with a
/// schedule-independent (sorted) result.
std::vector<BitGraph> expand_level(const std::vector<BitGraph>& parents, bool triangle_free_only,
                                   int workers);

/// All graphs of order n up to isomorphism, in canonical order.
std::vector<BitGraph> all_graphs_level(int n, bool triangle_free_only, int workers);

std::vector<Graph> enumerate_all(int n, int workers = 0);
std::vector<Graph> enumerate_connected(int n, int workers = 0);

/// Free trees of order n up to isomorphism (leaf-extension with canonical
/// deduplication).
std::vector<Graph> enumerate_trees(int n);

} // namespace palin

#endif
