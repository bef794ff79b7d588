#include <doctest.h>

#include <cmath>
#include <sstream>

#include "monopole/connectivity.hpp"
#include "monopole/divisor.hpp"
#include "monopole/edgelist.hpp"
#include "monopole/errors.hpp"
#include "monopole/families.hpp"
#include "monopole/graph.hpp"
#include "support/oracles.hpp"

using namespace monopole;

namespace {

std::vector<GeneratedGraph> small_corpus() {
    std::vector<GeneratedGraph> out;
    for (int n = 2; n <= 6; ++n) out.push_back(path(n));
    out.push_back(star(4));
    for (int k = 3; k <= 6; ++k) out.push_back(cycle(k));
    for (int n = 3; n <= 5; ++n) out.push_back(complete(n));
    out.push_back(wheel(4));
    out.push_back(unicyclic(4, {0}));
    out.push_back(unicyclic(5, {0, 0, 2}));
    out.push_back(clique_plus_pendant(3));
    out.push_back(bridged(cycle(3).graph, cycle(3).graph));
    for (std::uint64_t s = 1; s <= 4; ++s) out.push_back(random_tree(6, s));
    SplitMix64 rng(99);
    for (int i = 0; i < 4; ++i) out.push_back(random_connected(6, 3, rng));
    return out;
}

}  // namespace

TEST_CASE("graph construction validates simplicity") {
    CHECK_THROWS_AS(Graph::from_edges(1, {}), BadParameter);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), BadParameter);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), BadParameter);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), BadParameter);
    Graph g = Graph::from_edges(3, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("laplacian of the smallest graphs") {
    CHECK(build_laplacian(path(2).graph) == LaplacianMatrix{{1, -1}, {-1, 1}});
    CHECK(build_laplacian(cycle(3).graph) ==
          LaplacianMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    auto k4 = build_laplacian(complete(4).graph);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4[i][j] == (i == j ? 3 : -1));
}

TEST_CASE("laplacian rows sum to zero and the matrix is symmetric") {
    for (const auto& gg : small_corpus()) {
        auto lap = build_laplacian(gg.graph);
        int n = gg.graph.vertex_count();
        for (int i = 0; i < n; ++i) {
            long long row = 0;
            for (int j = 0; j < n; ++j) {
                row += lap[i][j];
                CHECK(lap[i][j] == lap[j][i]);
            }
            CHECK(row == 0);
        }
    }
}

TEST_CASE("genus of the named families") {
    CHECK(genus(path(5).graph) == 0);
    CHECK(genus(random_tree(8, 7).graph) == 0);
    CHECK(genus(wheel(4).graph) == 4);
    CHECK(wheel(4).graph.edge_count() == 8);
    CHECK(genus(bridged(cycle(3).graph, cycle(3).graph).graph) == 2);
    CHECK(genus(unicyclic(4, {0, 2}).graph) == 1);
    for (int n = 3; n <= 6; ++n) CHECK(genus(complete(n).graph) == n * (n - 1) / 2 - n + 1);

    Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(genus(two_parts), DisconnectedGraph);
}

TEST_CASE("canonical divisor is deg - 2 with total degree 2g - 2") {
    Divisor k3 = canonical_divisor(cycle(3).graph);
    CHECK(k3.is_zero());
    Divisor k4 = canonical_divisor(complete(4).graph);
    for (int v = 0; v < 4; ++v) CHECK(k4[v] == 1);
    CHECK(k4.degree() == 4);
    Divisor ks = canonical_divisor(star(4).graph);
    CHECK(ks[0] == 2);
    CHECK(ks[1] == -1);
    CHECK(ks.degree() == -2);
    Divisor ks5 = canonical_divisor(star(5).graph);
    CHECK(ks5[0] == 3);
    CHECK(ks5.degree() == -2);
    for (const auto& gg : small_corpus()) {
        CHECK(canonical_divisor(gg.graph).degree() == 2 * genus(gg.graph) - 2);
    }
}

TEST_CASE("edge connectivity: examples and the bipartition oracle") {
    CHECK(edge_connectivity(path(3).graph) == 1);
    CHECK(edge_connectivity(complete(4).graph) == 3);
    CHECK(edge_connectivity(wheel(4).graph) == 3);
    for (const auto& gg : small_corpus()) {
        CHECK(edge_connectivity(gg.graph) == oracle::edge_connectivity_bipartitions(gg.graph));
    }
}

TEST_CASE("vertex connectivity: examples") {
    CHECK(vertex_connectivity(path(3).graph) == 1);
    CHECK(vertex_connectivity(cycle(5).graph) == 2);
    CHECK(vertex_connectivity(complete(4).graph) == 3);
    CHECK(vertex_connectivity(path(2).graph) == 1);
    CHECK(vertex_connectivity(wheel(4).graph) == 3);
}

TEST_CASE("algebraic connectivity matches closed forms") {
    CHECK(algebraic_connectivity(complete(4).graph) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(algebraic_connectivity(path(2).graph) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(algebraic_connectivity(cycle(4).graph) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(algebraic_connectivity(path(3).graph) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(algebraic_connectivity(star(5).graph) == doctest::Approx(1.0).epsilon(1e-9));
    for (int k = 3; k <= 7; ++k) {
        double expect = 2.0 - 2.0 * std::cos(2.0 * M_PI / k);
        CHECK(std::abs(algebraic_connectivity(cycle(k).graph) - expect) < 1e-9);
    }
    for (int n = 2; n <= 7; ++n) {
        double expect = 2.0 - 2.0 * std::cos(M_PI / n);
        CHECK(std::abs(algebraic_connectivity(path(n).graph) - expect) < 1e-9);
    }
    // larger instances, where the eigenvalue crowds toward zero
    CHECK(std::abs(algebraic_connectivity(path(40).graph) - (2.0 - 2.0 * std::cos(M_PI / 40))) <
          1e-9);
    CHECK(std::abs(algebraic_connectivity(cycle(30).graph) -
                   (2.0 - 2.0 * std::cos(2.0 * M_PI / 30))) < 1e-9);
}

TEST_CASE("connectivity chain lambda2 <= kappa <= lambda <= delta") {
    for (const auto& gg : small_corpus()) {
        ConnectivityReport r = connectivity_report(gg.graph);
        // Fiedler's bound needs an incomplete graph: lambda2(K_n) = n while
        // kappa(K_n) = n - 1 by convention.
        if (!gg.graph.is_complete()) {
            CHECK(r.algebraic_connectivity <= r.vertex_connectivity + 1e-6);
        }
        CHECK(r.vertex_connectivity <= r.edge_connectivity);
        CHECK(r.edge_connectivity <= r.min_degree);
    }
}

TEST_CASE("cut vertices and removal components") {
    GeneratedGraph fig1 = bridged(cycle(3).graph, cycle(3).graph);
    auto cuts = cut_vertices(fig1.graph);
    CHECK(std::find(cuts.begin(), cuts.end(), fig1.p) != cuts.end());
    auto comps = components_of(fig1.graph, fig1.p);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});

    for (int v = 0; v < 5; ++v) CHECK(components_of(cycle(5).graph, v).size() == 1);
    CHECK(cut_vertices(cycle(5).graph).empty());

    GeneratedGraph s = star(4);
    auto hub_comps = components_of(s.graph, 0);
    CHECK(hub_comps.size() == 4);
    for (const auto& c : hub_comps) CHECK(c.size() == 1);
}

TEST_CASE("family generators carry the right distinguished vertex") {
    GeneratedGraph w = wheel(4);
    CHECK(w.graph.vertex_count() == 5);
    CHECK(w.graph.degree(w.p) == 4);

    GeneratedGraph cp = clique_plus_pendant(3);
    CHECK(cp.graph.vertex_count() == 4);
    CHECK(cp.graph.degree(cp.p) == 3);
    CHECK(cp.graph.degree(3) == 1);
    CHECK(cp.graph.has_edge(cp.p, 3));

    GeneratedGraph u = unicyclic(4, {0});
    CHECK(u.graph.degree(u.p) == 2);
    CHECK(u.p != 0);  // vertex 0 has the pendant

    CHECK_THROWS_AS(cycle(2), BadParameter);
    CHECK_THROWS_AS(wheel(2), BadParameter);
    CHECK_THROWS_AS(clique_plus_pendant(1), BadParameter);
    CHECK_THROWS_AS(unicyclic(3, {5}), BadParameter);
}

TEST_CASE("random trees are reproducible trees") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        GeneratedGraph a = random_tree(7, seed);
        GeneratedGraph b = random_tree(7, seed);
        CHECK(a.graph == b.graph);
        CHECK(a.graph.edge_count() == 6);
        CHECK(a.graph.is_connected());
    }
    CHECK_FALSE(random_tree(7, 1).graph == random_tree(7, 2).graph);

    SplitMix64 rng(5);
    GeneratedGraph rc = random_connected(6, 3, rng);
    CHECK(rc.graph.is_connected());
    CHECK(genus(rc.graph) == 3);
}

TEST_CASE("edge list round trip and parse errors") {
    for (const auto& gg : small_corpus()) {
        std::string text = edge_list_string(gg.graph);
        std::istringstream in(text);
        CHECK(read_edge_list(in) == gg.graph);
    }
    std::istringstream commented("# fig 1\n3\n0 1 # bridge\n1 2\n");
    Graph g = read_edge_list(commented);
    CHECK(g.edge_count() == 2);

    std::istringstream loop("2\n0 0\n");
    CHECK_THROWS_AS(read_edge_list(loop), BadParameter);
    std::istringstream dup("3\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(dup), BadParameter);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), BadParameter);
    std::istringstream junk("3\n0 x\n");
    CHECK_THROWS_AS(read_edge_list(junk), BadParameter);
}

TEST_CASE("generator specs address every family") {
    CHECK(graph_from_spec("complete:4", 0).graph == complete(4).graph);
    CHECK(graph_from_spec("wheel:4", 0).p == 4);
    GeneratedGraph b = graph_from_spec("bridged:triangle,c4", 0);
    CHECK(b.graph.vertex_count() == 8);
    CHECK(genus(b.graph) == 2);
    GeneratedGraph u = graph_from_spec("unicyclic:4,0,2", 0);
    CHECK(u.graph.vertex_count() == 6);
    CHECK(graph_from_spec("random-tree:6", 3).graph == random_tree(6, 3).graph);
    CHECK_THROWS_AS(graph_from_spec("moebius:4", 0), BadParameter);
    CHECK_THROWS_AS(graph_from_spec("complete", 0), BadParameter);
    CHECK_THROWS_AS(graph_from_spec("bridged:x,y", 0), BadParameter);
}
