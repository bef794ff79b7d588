#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monopole/ints.hpp"

namespace monopole {

/// Finite simple undirected graph on vertices 0..n-1 with sorted neighbor
/// lists. Immutable after construction and safe to share across threads.
class Graph {
  public:
    // Empty placeholder; every usable graph comes out of from_edges.
    Graph() = default;

    // Validates: n >= 2, no loops, no duplicate edges, indices in range.
    // Throws BadParameter otherwise. Edge order in the input is irrelevant.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as sorted (u < v) pairs in lexicographic order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_connected() const;
    int min_degree() const;
    bool is_complete() const;

    // BFS distances from source; unreachable vertices get -1.
    std::vector<int> distances_from(int source) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

using LaplacianMatrix = std::vector<std::vector<long long>>;

// Delta = D - A. Row sums are zero, matrix symmetric.
LaplacianMatrix build_laplacian(const Graph& g);

// g = |E| - |V| + 1. Throws DisconnectedGraph when the formula's single
// component assumption fails.
int genus(const Graph& g);

void require_connected(const Graph& g);

}  // namespace monopole
