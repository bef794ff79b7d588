#pragma once

#include <optional>
#include <vector>

#include "monopole/divisor.hpp"
#include "monopole/graph.hpp"
#include "monopole/ints.hpp"

namespace monopole {

inline constexpr unsigned long long kDefaultAbelJacobiCap = 2'000'000;

using IntMatrix = std::vector<std::vector<Int>>;

struct SnfResult {
    IntMatrix u;                // left transform
    IntMatrix v;                // right transform
    std::vector<Int> diagonal;  // d_1 | d_2 | ..., all >= 0
};

// Smith normal form of a square integer matrix by smallest-pivot Euclidean
// reduction, with u * a * v reconstructing the diagonal exactly.
SnfResult smith_normal_form(const IntMatrix& a);

struct JacobianStructure {
    std::vector<Int> invariant_factors;  // the diagonal entries > 1
    Int order;                           // = number of spanning trees
    int base_vertex = 0;
    SnfResult transforms;
};

// Structure of the cokernel of the reduced Laplacian (row and column q
// deleted). Throws DisconnectedGraph.
JacobianStructure jacobian(const Graph& g, int q);

/// Canonical label of a degree-zero divisor class: its q-reduced
/// representative. Two divisors get equal ids iff linearly equivalent.
struct JacClassId {
    int base = 0;
    Divisor reduced;

    bool operator==(const JacClassId& o) const {
        return base == o.base && reduced == o.reduced;
    }
    bool operator<(const JacClassId& o) const { return lex_less(reduced, o.reduced); }
};

JacClassId jac_class(const Graph& g, const Divisor& degree_zero, int q = 0);

// Class of D - kP for an effective divisor D of degree k.
JacClassId abel_jacobi(const Graph& g, int p, long long k, const Divisor& d);

// Exhaustive injectivity of the degree-k Abel-Jacobi map at p. By the
// Baker-Norine criterion this matches (k+1)-edge-connectivity; callers
// cross-check the two routes.
bool abel_jacobi_injective(const Graph& g, int p, long long k,
                           unsigned long long cap = kDefaultAbelJacobiCap);

}  // namespace monopole
