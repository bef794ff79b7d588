#pragma once

#include <map>
#include <vector>

#include "monopole/graph.hpp"

namespace monopole {

// Global minimum edge cut on unit weights (Stoer-Wagner). Exact.
int edge_connectivity(const Graph& g);

// Minimum vertex separator by brute force over subsets of size < min
// degree; exponential, intended for desk scale (n <= 12). Returns n-1 for
// complete graphs by convention.
int vertex_connectivity(const Graph& g);

// Second smallest Laplacian eigenvalue, via cyclic Jacobi rotations on the
// integer matrix cast to double. Absolute error below 1e-9 at this scale.
double algebraic_connectivity(const Graph& g);

// Connected components of G - v, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components_of(const Graph& g, int v);

std::vector<int> cut_vertices(const Graph& g);

struct ConnectivityReport {
    int edge_connectivity = 0;
    int vertex_connectivity = 0;
    int min_degree = 0;
    double algebraic_connectivity = 0.0;
    std::vector<int> cut_vertices;
    std::map<int, std::vector<std::vector<int>>> components_after_removal;
};

ConnectivityReport connectivity_report(const Graph& g);

}  // namespace monopole
