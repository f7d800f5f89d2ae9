#ifndef PALIN_GRAPH_HPP
#define PALIN_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "palin/errors.hpp"

namespace palin {

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// strictly sorted; loops and parallel edges are rejected. Values are
/// immutable once built and safe to share across threads.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    /// Insert edge {u,v}; throws on loops, duplicates or bad indices.
    void add_edge(int u, int v);

    /// Row bitmasks of the adjacency matrix, for n <= 64.
    std::vector<std::uint64_t> dense_rows() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

  private:
    std::vector<std::vector<int>> adj_;
};

// --- graph6 codec (one graph per line, McKay's format) -----------------

Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// --- structural predicates ---------------------------------------------

struct Bipartition {
    bool bipartite = false;
    std::vector<int> part_v, part_w; // valid when bipartite
    std::vector<int> odd_cycle;      // closed odd walk when not
};

std::vector<std::vector<int>> connected_components(const Graph& g);
Bipartition bipartition(const Graph& g);
std::vector<int> hairs(const Graph& g); // degree-1 vertices
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);
bool is_connected(const Graph& g);
bool triangle_free(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph disjoint_union(const Graph& a, const Graph& b);

// --- common families (handy for tests and generators) ------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}, center = vertex 0

} // namespace palin

#endif
