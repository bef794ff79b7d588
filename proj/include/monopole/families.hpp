#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monopole/graph.hpp"
#include "monopole/rng.hpp"

namespace monopole {

// A generated graph together with the distinguished vertex the family's
// statement is about (hub of a wheel, bridge vertex, clique vertex with a
// pendant, ...).
struct GeneratedGraph {
    Graph graph;
    int p = 0;
    std::string name;
};

GeneratedGraph path(int n);
GeneratedGraph star(int leaves);                 // hub is vertex 0
GeneratedGraph cycle(int k);                     // k >= 3
GeneratedGraph complete(int n);
GeneratedGraph wheel(int rim);                   // rim >= 3 cycle vertices, hub last

// Cycle 0..k-1 plus one pendant leaf per entry of `attach` (a cycle vertex
// index, repeats allowed). P is the first degree-two cycle vertex if any.
GeneratedGraph unicyclic(int k, const std::vector<int>& attach);

// New vertex P joined by one edge to vertex 0 of each part.
GeneratedGraph bridged(const Graph& g1, const Graph& g2);

// Clique of order m with P = vertex 0, plus a pendant vertex attached to P.
GeneratedGraph clique_plus_pendant(int m);

// Pruefer decoding; identical trees for identical seeds on any platform.
GeneratedGraph random_tree(int n, std::uint64_t seed);
GeneratedGraph random_tree(int n, SplitMix64& rng);

// Random spanning tree plus `extra_edges` distinct non-tree edges chosen by
// a seeded shuffle, so genus == extra_edges (capped by the available pairs).
GeneratedGraph random_connected(int n, int extra_edges, SplitMix64& rng);

}  // namespace monopole
