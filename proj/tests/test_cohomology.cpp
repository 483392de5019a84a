#include <doctest.h>

#include <random>

#include "graphcoh/closed_forms.hpp"
#include "graphcoh/cohomology.hpp"
#include "graphcoh/verify.hpp"
#include "oracles.hpp"

using namespace graphcoh;

namespace {

Graph figure_one_graph() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

CliqueFamily example_sigma() {
    return CliqueFamily({VertexSet{1, 2}, VertexSet{1, 2}, VertexSet{1, 2, 3}});
}

Graph figure_five_graph() {
    return Graph(9, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 6},
                     {6, 7}, {7, 8}, {7, 9}, {8, 9}});
}

CliqueFamily figure_five_sigma() {
    return CliqueFamily(
        {VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}, VertexSet{7, 8, 9}});
}

}  // namespace

TEST_CASE("betti of the Heisenberg algebra") {
    BettiTable bt = betti(named_graph("complete", 2));
    CHECK(bt.dims == std::vector<std::int64_t>{1, 2, 2, 1});
    CHECK(bt.dims == testoracle::ce_betti(named_graph("complete", 2), {}));
}

TEST_CASE("betti of abelian algebras is binomial") {
    for (int n = 0; n <= 5; ++n) {
        BettiTable bt = betti(named_graph("empty", n));
        REQUIRE(bt.top_degree() == n);
        for (int d = 0; d <= n; ++d) CHECK(bt.at(d) == binomial(n, d));
    }
}

TEST_CASE("betti agrees with the structure-constant oracle") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 4), rng);
        CliqueFamily sigma = random_clique_family(g, 2, rng);
        CHECK(betti(g, sigma).dims == testoracle::ce_betti(g, sigma));
    }
}

TEST_CASE("solvable example: 11-dimensional algebra of the triangle-with-tail") {
    BettiTable direct = betti(figure_one_graph(), example_sigma());
    std::vector<std::int64_t> expect{1, 4, 6, 4, 1, 0, 0, 0, 0, 0, 0, 0};
    CHECK(direct.dims == expect);
    CHECK(direct.dims == testoracle::ce_betti(figure_one_graph(), example_sigma()));
    CHECK(ggi_betti_reduced(figure_one_graph(), example_sigma()).dims == expect);
}

TEST_CASE("essential cohomology of the smallest classes") {
    EssentialTable k1 = essential_betti(named_graph("complete", 1));
    CHECK(k1.dims == std::vector<std::int64_t>{0, 1});
    for (int n = 1; n <= 4; ++n) {
        EssentialTable en = essential_betti(named_graph("empty", n));
        for (int d = 0; d <= n; ++d) CHECK(en.at(d) == (d == n ? 1 : 0));
    }
    CHECK(essential_betti(named_graph("complete", 2)).dims ==
          std::vector<std::int64_t>{0, 0, 2, 1});
    CHECK(essential_betti(named_graph("path", 3)).dims ==
          std::vector<std::int64_t>{0, 0, 1, 4, 3, 1});
    CHECK(essential_betti(named_graph("complete", 3)).dims ==
          std::vector<std::int64_t>{0, 0, 2, 9, 8, 3, 1});
    // 0-vertex graph: the empty-support block is the constants
    CHECK(essential_betti(Graph(0, {})).dims == std::vector<std::int64_t>{1});
}

TEST_CASE("bigraded essential refinement") {
    EssentialTable s4 = essential_betti(named_graph("star", 4));
    CHECK(s4.bigraded_at(4, 0) == 0);
    CHECK(s4.bigraded_at(4, 1) == 3);
    CHECK(s4.bigraded_at(4, 2) == 2);
    CHECK(s4.bigraded_at(4, 3) == 0);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 4), rng);
        EssentialTable t = essential_betti(g);
        for (int d = 0; d < static_cast<int>(t.dims.size()); ++d) {
            std::int64_t sum = 0;
            for (int r = 0; r <= d; ++r) sum += t.bigraded_at(d, r);
            CHECK(sum == t.at(d));
        }
        for (int d = 0; d < static_cast<int>(t.dims.size()); ++d)
            CHECK(essential_beta_at(g, d) == t.at(d));
    }
}

TEST_CASE("essential vanishing bound: beta_d = 0 unless |V| <= 2d-1") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            EssentialTable t = essential_betti(g);
            for (int d = 0; 2 * d - 1 < n && d < static_cast<int>(t.dims.size()); ++d)
                CHECK(t.at(d) == 0);
        }
}

TEST_CASE("decomposition evaluation of b_3 on the six-vertex example") {
    Graph fig2(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}});
    CHECK(betti_via_decomposition(fig2, 3) == 74);
    CHECK(betti_degree(fig2, {}, 3) == 74);
}

TEST_CASE("decomposition at degree one counts vertices") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 6), rng);
        CHECK(betti_via_decomposition(g, 1) == g.vertex_count());
    }
}

TEST_CASE("decomposition equals the engine on all small classes, all degrees") {
    DiskCache memo = DiskCache::memory();
    EngineOptions opts;
    opts.cache = &memo;
    for (int n = 0; n <= 4; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            BettiTable bt = betti(g);
            for (int d = 0; d <= bt.top_degree(); ++d)
                CHECK(betti_via_decomposition(g, d, opts) == bt.at(d));
        }
}

TEST_CASE("star second Betti via decomposition and closed form") {
    Graph s4 = named_graph("star", 4);
    CHECK(betti_via_decomposition(s4, 2) == 20);
    CHECK(betti_degree(s4, {}, 2) == 20);
    CHECK(b2_formula(s4) == 20);
}

TEST_CASE("kunneth convolution") {
    BettiTable point{{1}};
    BettiTable heis{{1, 2, 2, 1}};
    CHECK(kunneth(heis, point) == heis);

    // essential tables convolve across disjoint unions: beta_3(K2+K1) = 2
    BettiTable essential_k2{{0, 0, 2, 1}};
    BettiTable essential_k1{{0, 1}};
    CHECK(kunneth(essential_k2, essential_k1).at(3) == 2);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        Graph a = random_graph(1 + static_cast<int>(rng() % 3), rng);
        Graph b = random_graph(1 + static_cast<int>(rng() % 3), rng);
        CHECK(same_betti(betti(disjoint_union(a, b)), kunneth(betti(a), betti(b))));
    }
}

TEST_CASE("reduction of the nine-vertex solvable example") {
    auto [reduced, s] = ggi_reduce(figure_five_graph(), figure_five_sigma());
    CHECK(s == 4);
    CHECK(reduced == Graph(1, {}));
    BettiTable bt = ggi_betti_reduced(figure_five_graph(), figure_five_sigma());
    for (int d = 0; d <= bt.top_degree(); ++d) CHECK(bt.at(d) == binomial(5, d));
}

TEST_CASE("reduction edge cases") {
    Graph g = figure_one_graph();
    auto [same, zero] = ggi_reduce(g, {});
    CHECK(zero == 0);
    CHECK(same == g);
    CHECK(same_betti(ggi_betti_reduced(g, {}), betti(g)));

    Graph k3 = named_graph("complete", 3);
    auto [empty, one] = ggi_reduce(k3, CliqueFamily({VertexSet{1, 2, 3}}));
    CHECK(one == 1);
    CHECK(empty.vertex_count() == 0);

    CHECK_THROWS_AS(ggi_reduce(g, CliqueFamily({VertexSet{1, 4}})), std::invalid_argument);
}

TEST_CASE("poincare duality and euler characteristic on small classes") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            BettiTable bt = betti(g);
            CHECK(bt.palindromic());
            CHECK(bt.at(0) == 1);
            if (n >= 1) CHECK(bt.euler() == 0);
        }
}

TEST_CASE("blockwise and monolithic ranks agree") {
    std::mt19937_64 rng(67);
    EngineOptions mono;
    mono.method = BettiMethod::Monolithic;
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 5), rng);
        CliqueFamily sigma = random_clique_family(g, 2, rng);
        CHECK(betti(g, sigma) == betti(g, sigma, mono));
    }
}

TEST_CASE("decomposition degree range is bounded by the canonical-code limit") {
    Graph big = named_graph("empty", 12);
    // census classes up to min(12, 2*3-1) = 5 vertices: fine
    CHECK(betti_via_decomposition(big, 3) == binomial(12, 3));
    // degree 6 would need classes on up to 11 vertices
    CHECK_THROWS_AS(betti_via_decomposition(big, 6), std::invalid_argument);
}

TEST_CASE("betti of the 0-vertex graph") {
    BettiTable bt = betti(Graph(0, {}));
    CHECK(bt.dims == std::vector<std::int64_t>{1});
    CHECK(betti_via_decomposition(Graph(0, {}), 0) == 1);
    CHECK(betti_via_decomposition(Graph(0, {}), 1) == 0);
}

TEST_CASE("pinned lift representative in the star complex") {
    // x3*x4*x{1,2}* - x2*x3*x{1,4}* spans a class of the (S = V, N = 4)
    // block of S3 in degree 3; the block receives no differential, so being
    // a nonzero cocycle suffices.
    Graph s3 = named_graph("star", 3);
    CochainComplex cc(s3);
    BasisFilter block{s3.vertex_set(), 4};
    auto deg3 = cc.basis(3, block);
    REQUIRE(deg3.size() == 3);
    CHECK(cc.basis(2, block).empty());

    auto mono = [&](const std::string& label) -> Monomial {
        for (Monomial m : deg3)
            if (cc.monomial_label(m) == label) return m;
        FAIL("missing basis monomial ", label);
        return 0;
    };
    Monomial a = mono("x3* x4* x{1,2}*");
    Monomial b = mono("x2* x3* x{1,4}*");
    std::map<Monomial, std::int64_t> image;
    for (auto [t, v] : cc.apply_q(a)) image[t] += v;
    for (auto [t, v] : cc.apply_q(b)) image[t] -= v;
    for (auto [t, v] : image) CHECK(v == 0);

    // and the block's cohomology is the expected bigraded value n - 1 = 2
    EssentialTable ess = essential_betti(s3);
    CHECK(ess.bigraded_at(3, 1) == 2);
}

TEST_CASE("results are independent of the worker-thread count") {
    EngineOptions four_threads;
    four_threads.threads = 4;
    EngineOptions mono_threads;
    mono_threads.threads = 4;
    mono_threads.method = BettiMethod::Monolithic;
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 4; ++trial) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 2), rng);
        CliqueFamily sigma = random_clique_family(g, 2, rng);
        BettiTable serial = betti(g, sigma);
        CHECK(betti(g, sigma, four_threads) == serial);
        CHECK(betti(g, sigma, mono_threads) == serial);
    }
}

TEST_CASE("degree-limited betti matches the full table") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 4), rng);
        CliqueFamily sigma = random_clique_family(g, 2, rng);
        BettiTable bt = betti(g, sigma);
        for (int d = 0; d <= bt.top_degree() + 1; ++d)
            CHECK(betti_degree(g, sigma, d) == bt.at(d));
    }
}
