#include <doctest.h>

#include "monopole/errors.hpp"
#include "monopole/families.hpp"
#include "monopole/jacobian.hpp"
#include "monopole/rng.hpp"
#include "support/oracles.hpp"

using namespace monopole;

namespace {

std::vector<GeneratedGraph> jac_corpus() {
    std::vector<GeneratedGraph> out;
    out.push_back(path(4));
    out.push_back(star(4));
    for (int k = 3; k <= 6; ++k) out.push_back(cycle(k));
    out.push_back(complete(4));
    out.push_back(complete(5));
    out.push_back(wheel(4));
    out.push_back(unicyclic(5, {0, 2}));
    out.push_back(clique_plus_pendant(3));
    out.push_back(bridged(cycle(3).graph, cycle(3).graph));
    SplitMix64 rng(7);
    out.push_back(random_connected(6, 3, rng));
    out.push_back(random_connected(5, 2, rng));
    return out;
}

IntMatrix reduced_laplacian(const Graph& g, int q) {
    auto lap = build_laplacian(g);
    int n = g.vertex_count();
    IntMatrix m;
    for (int i = 0; i < n; ++i) {
        if (i == q) continue;
        std::vector<Int> row;
        for (int j = 0; j < n; ++j) {
            if (j == q) continue;
            row.push_back(lap[i][j]);
        }
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

TEST_CASE("smith normal form on small matrices") {
    SplitMix64 rng(13);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t r = 1 + rng.next_below(4);
        IntMatrix a(r, std::vector<Int>(r));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<long long>(rng.next_below(11)) - 5;

        SnfResult s = smith_normal_form(a);
        // diagonal reproduced exactly by the transforms
        IntMatrix prod(r, std::vector<Int>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < r; ++j) prod[i][j] += s.u[i][k] * a[k][j];
        IntMatrix full(r, std::vector<Int>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < r; ++j) full[i][j] += prod[i][k] * s.v[k][j];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                CHECK(full[i][j] == (i == j ? s.diagonal[i] : Int(0)));

        // divisibility chain, zeros trailing
        for (std::size_t i = 0; i + 1 < r; ++i) {
            if (s.diagonal[i + 1] != 0) {
                REQUIRE(s.diagonal[i] != 0);
                CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            }
        }
        // transforms are unimodular
        Int du = oracle::determinant_bareiss(s.u);
        Int dv = oracle::determinant_bareiss(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        // determinant preserved up to sign
        Int da = oracle::determinant_bareiss(a);
        Int dd = 1;
        for (const Int& x : s.diagonal) dd *= x;
        CHECK((da == dd || da == -dd));
    }
}

TEST_CASE("jacobian of the named families") {
    for (int k = 3; k <= 7; ++k) {
        JacobianStructure j = jacobian(cycle(k).graph, 0);
        REQUIRE(j.invariant_factors.size() == 1);
        CHECK(j.invariant_factors[0] == k);
        CHECK(j.order == k);
    }
    for (const auto& t : {path(5), star(4), random_tree(7, 2)}) {
        JacobianStructure j = jacobian(t.graph, 0);
        CHECK(j.invariant_factors.empty());
        CHECK(j.order == 1);
    }
    JacobianStructure k4 = jacobian(complete(4).graph, 0);
    CHECK(k4.order == 16);
    REQUIRE(k4.invariant_factors.size() == 2);
    CHECK(k4.invariant_factors[0] == 4);
    CHECK(k4.invariant_factors[1] == 4);

    // n^(n-2) spanning trees split into n-2 cyclic factors of order n.
    JacobianStructure k5 = jacobian(complete(5).graph, 0);
    CHECK(k5.order == 125);
    CHECK(k5.invariant_factors == std::vector<Int>{5, 5, 5});
}

TEST_CASE("jacobian order equals the spanning tree count") {
    for (const auto& gg : jac_corpus()) {
        JacobianStructure j = jacobian(gg.graph, 0);
        Int det = oracle::determinant_bareiss(reduced_laplacian(gg.graph, 0));
        CHECK(j.order == det);
        CHECK(j.order == oracle::spanning_tree_count_subsets(gg.graph));
    }
    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(jacobian(split, 0), DisconnectedGraph);
}

TEST_CASE("invariant factors do not depend on the deleted vertex") {
    for (const auto& gg : jac_corpus()) {
        JacobianStructure base = jacobian(gg.graph, 0);
        for (int q = 1; q < gg.graph.vertex_count(); ++q) {
            JacobianStructure other = jacobian(gg.graph, q);
            CHECK(other.invariant_factors == base.invariant_factors);
            CHECK(other.order == base.order);
        }
    }
}

TEST_CASE("abel-jacobi map values") {
    Graph c3 = cycle(3).graph;
    Divisor kp(static_cast<std::size_t>(3));
    kp[0] = 2;
    CHECK(abel_jacobi(c3, 0, 2, kp).reduced.is_zero());

    Divisor v1(static_cast<std::size_t>(3));
    v1[1] = 1;
    CHECK_FALSE(abel_jacobi(c3, 0, 1, v1).reduced.is_zero());

    Graph k4 = complete(4).graph;
    for (int q = 1; q < 4; ++q) {
        Divisor d(static_cast<std::size_t>(4));
        d[q] = 1;
        CHECK_FALSE(abel_jacobi(k4, 0, 1, d).reduced.is_zero());
    }

    Divisor bad(static_cast<std::size_t>(3));
    bad[1] = 2;
    CHECK_THROWS_AS(abel_jacobi(c3, 0, 1, bad), BadDegree);
    Divisor neg(static_cast<std::size_t>(3));
    neg[1] = -1;
    neg[2] = 2;
    CHECK_THROWS_AS(abel_jacobi(c3, 0, 1, neg), NotEffective);
    CHECK_THROWS_AS(abel_jacobi(c3, 0, 0, Divisor::zero(3)), BadParameter);
}

TEST_CASE("class ids agree with linear equivalence") {
    SplitMix64 rng(19);
    for (const auto& gg : jac_corpus()) {
        const Graph& g = gg.graph;
        int n = g.vertex_count();
        for (int rep = 0; rep < 10; ++rep) {
            Divisor d1(static_cast<std::size_t>(n)), d2(static_cast<std::size_t>(n));
            for (int v = 1; v < n; ++v) {
                d1[v] = static_cast<long long>(rng.next_below(5)) - 2;
                d2[v] = static_cast<long long>(rng.next_below(5)) - 2;
            }
            d1[0] = -d1.degree();
            d2[0] = -d2.degree();
            bool same = jac_class(g, d1) == jac_class(g, d2);
            CHECK(same == linearly_equivalent(g, d1, d2).has_value());
        }
    }
    CHECK_THROWS_AS(jac_class(cycle(3).graph, Divisor{std::vector<Int>{1, 0, 0}}), BadDegree);
}

TEST_CASE("abel-jacobi injectivity matches edge connectivity") {
    CHECK(abel_jacobi_injective(complete(4).graph, 0, 2));
    CHECK_FALSE(abel_jacobi_injective(path(3).graph, 0, 1));
    CHECK(abel_jacobi_injective(cycle(4).graph, 0, 1));
    CHECK_FALSE(abel_jacobi_injective(cycle(4).graph, 0, 2));
    CHECK_THROWS_AS(abel_jacobi_injective(complete(5).graph, 0, 3, 10), EnumerationCapExceeded);
}
