#pragma once

// Brute-force reference implementations for the oracle-equivalence tests.
// Everything here is deliberately independent of the library's algorithmic
// choices: subset quantifiers instead of burning, explicit script windows
// instead of reduction, minors and edge subsets instead of Smith form.

#include <optional>
#include <vector>

#include "monopole/divisor.hpp"
#include "monopole/graph.hpp"
#include "monopole/ints.hpp"

namespace monopole::oracle {

// Minimum crossing-edge count over all proper bipartitions (2^(n-1) of them).
int edge_connectivity_bipartitions(const Graph& g);

// Exhaustive search for f with f(0) == 0, entries in [-window, window],
// and d1 + Delta(f) == d2.
std::optional<FiringScript> script_search_equivalent(const Graph& g, const Divisor& d1,
                                                     const Divisor& d2, long long window);

// Exhaustive search for f with f(0) == 0, entries in [-window, window],
// making d + Delta(f) effective.
bool winnable_script_search(const Graph& g, const Divisor& d, long long window);

// Monopole-semigroup membership straight from the definition: some f in
// the window has Delta(f) nonnegative away from p with Delta_p(f) == -alpha.
bool hf_member_script_search(const Graph& g, int p, long long alpha, long long window);

// Fraction-free (Bareiss) determinant.
Int determinant_bareiss(std::vector<std::vector<Int>> m);

// Count spanning trees by checking every (n-1)-edge subset.
long long spanning_tree_count_subsets(const Graph& g);

// Every q-reduced divisor of the given degree, in lexicographic order.
// Parking is decided by the subset-quantifier oracle when `bruteforce_parking`
// is set, otherwise by Dhar burning.
std::vector<Divisor> reduced_divisors_of_degree(const Graph& g, int q, long long degree,
                                                bool bruteforce_parking);

}  // namespace monopole::oracle
