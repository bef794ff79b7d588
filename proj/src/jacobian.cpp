#include "monopole/jacobian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "monopole/enumeration.hpp"
#include "monopole/errors.hpp"

namespace monopole {

namespace {

IntMatrix identity(std::size_t r) {
    IntMatrix m(r, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t r = a.size(), c = b[0].size(), k = b.size();
    IntMatrix m(r, std::vector<Int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][l] * b[l][j];
        }
    return m;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    std::size_t r = a.size();
    IntMatrix s = a;
    IntMatrix u = identity(r);
    IntMatrix v = identity(r);

    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < r; ++j) {
            s[dst][j] -= q * s[src][j];
            u[dst][j] -= q * u[src][j];
        }
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < r; ++i) {
            s[i][dst] -= q * s[i][src];
            v[i][dst] -= q * v[i][src];
        }
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(s[i], s[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < r; ++k) {
            std::swap(s[k][i], s[k][j]);
            std::swap(v[k][i], v[k][j]);
        }
    };

    for (std::size_t t = 0; t < r; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < r; ++j) {
                    if (s[i][j] == 0) continue;
                    if (!found || abs_int(s[i][j]) < abs_int(s[pi][pj])) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                // trailing block is zero; diagonal entries t.. stay 0
                t = r;
                break;
            }
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s[i][t] == 0) continue;
                Int q = s[i][t] / s[t][t];
                if (q != 0) row_sub(i, t, q);
                if (s[i][t] != 0) clean = false;  // remainder, re-pivot
            }
            for (std::size_t j = t + 1; j < r; ++j) {
                if (s[t][j] == 0) continue;
                Int q = s[t][j] / s[t][t];
                if (q != 0) col_sub(j, t, q);
                if (s[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < r && divides; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        // fold row i into row t and restart this pivot
                        for (std::size_t c = 0; c < r; ++c) {
                            s[t][c] += s[i][c];
                            u[t][c] += u[i][c];
                        }
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= r) break;
        if (s[t][t] < 0) {
            for (std::size_t j = 0; j < r; ++j) {
                s[t][j] = -s[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }

    SnfResult out;
    out.u = std::move(u);
    out.v = std::move(v);
    out.diagonal.resize(r);
    for (std::size_t i = 0; i < r; ++i) out.diagonal[i] = s[i][i];
    return out;
}

JacobianStructure jacobian(const Graph& g, int q) {
    require_connected(g);
    int n = g.vertex_count();
    if (q < 0 || q >= n) throw BadParameter("base vertex out of range");

    auto lap = build_laplacian(g);
    std::size_t r = static_cast<std::size_t>(n - 1);
    IntMatrix reduced(r, std::vector<Int>(r));
    std::size_t ri = 0;
    for (int i = 0; i < n; ++i) {
        if (i == q) continue;
        std::size_t rj = 0;
        for (int j = 0; j < n; ++j) {
            if (j == q) continue;
            reduced[ri][rj++] = lap[i][j];
        }
        ++ri;
    }

    JacobianStructure out;
    out.base_vertex = q;
    out.transforms = smith_normal_form(reduced);

    // u * L_q * v must reproduce the diagonal exactly.
    IntMatrix check = matmul(matmul(out.transforms.u, reduced), out.transforms.v);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Int expect = (i == j) ? out.transforms.diagonal[i] : Int(0);
            if (check[i][j] != expect) {
                throw std::logic_error("Smith normal form transform verification failed");
            }
        }

    out.order = 1;
    for (const Int& d : out.transforms.diagonal) {
        out.order *= d;
        if (d > 1) out.invariant_factors.push_back(d);
    }
    if (out.order <= 0) throw std::logic_error("reduced Laplacian is singular");
    return out;
}

JacClassId jac_class(const Graph& g, const Divisor& degree_zero, int q) {
    if (degree_zero.degree() != 0) throw BadDegree("class label needs a degree-zero divisor");
    return JacClassId{q, reduce(g, degree_zero, q).reduced};
}

JacClassId abel_jacobi(const Graph& g, int p, long long k, const Divisor& d) {
    if (p < 0 || p >= g.vertex_count()) throw BadParameter("vertex out of range");
    if (k <= 0) throw BadParameter("map degree must be positive");
    if (!d.is_effective()) throw NotEffective("Abel-Jacobi input must be effective");
    if (d.degree() != k) throw BadDegree("divisor degree does not match map degree");
    Divisor shifted = d;
    shifted[static_cast<std::size_t>(p)] -= k;
    return jac_class(g, shifted, 0);
}

bool abel_jacobi_injective(const Graph& g, int p, long long k, unsigned long long cap) {
    require_connected(g);
    if (p < 0 || p >= g.vertex_count()) throw BadParameter("vertex out of range");
    if (k <= 0) throw BadParameter("map degree must be positive");
    int n = g.vertex_count();
    unsigned long long total = count_effective_divisors(n, k, cap);
    if (total > cap) throw EnumerationCapExceeded(total, cap);

    Reducer red(g, 0);
    std::set<std::vector<long long>> seen;
    bool injective = true;
    for_each_composition(n, k, [&](const std::vector<long long>& e) {
        std::vector<long long> d = e;
        d[static_cast<std::size_t>(p)] -= k;
        if (!seen.insert(red.reduced_values(std::move(d))).second) {
            injective = false;
            return false;
        }
        return true;
    });
    return injective;
}

}  // namespace monopole
