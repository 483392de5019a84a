#include "graphcoh/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "graphcoh/census.hpp"
#include "graphcoh/closed_forms.hpp"
#include "graphcoh/complex.hpp"

namespace graphcoh {

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

int SuiteResult::failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

CliqueFamily random_clique_family(const Graph& g, int max_cliques, std::mt19937_64& rng) {
    std::vector<VertexSet> pool;
    for (int k = 1; k <= g.vertex_count(); ++k)
        for (const auto& c : enumerate_cliques(g, k)) pool.push_back(c);
    CliqueFamily out;
    if (pool.empty() || max_cliques <= 0) return out;
    int count = static_cast<int>(rng() % (max_cliques + 1));
    for (int i = 0; i < count; ++i) out.push_back(pool[rng() % pool.size()]);
    return out;
}

namespace {

void check(SuiteResult& suite, const std::string& name, bool ok, const std::string& detail = "") {
    suite.checks.push_back({name, ok, detail});
}

Graph example_six_vertex_graph() {
    // 6 vertices, edges 12 23 34 14 15 56: a 4-cycle with a pendant path
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}});
}

Graph example_nine_vertex_graph() {
    return Graph(9, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 6},
                     {6, 7}, {7, 8}, {7, 9}, {8, 9}});
}

CliqueFamily example_nine_vertex_cliques() {
    return CliqueFamily{{VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5},
                         VertexSet{7, 8, 9}}};
}

// known isomorphism-class counts per order (A000088)
constexpr std::int64_t kClassCounts[] = {1, 1, 2, 4, 11, 34, 156};

}  // namespace

SuiteResult verify_b2(const VerifyOptions& opts) {
    SuiteResult suite{"b2", {}};
    for (int n = 0; n <= opts.max_vertices; ++n) {
        auto classes = graph_isomorphism_classes(n);
        if (n <= 6)
            check(suite, "class count on " + std::to_string(n) + " vertices",
                  static_cast<std::int64_t>(classes.size()) == kClassCounts[n],
                  "got " + std::to_string(classes.size()));
        std::ostringstream bad;
        int failures = 0;
        for (const auto& g : classes) {
            std::int64_t b1 = betti_degree(g, {}, 1, opts.engine);
            std::int64_t b2 = betti_degree(g, {}, 2, opts.engine);
            if (b1 != b1_formula(g) || b2 != b2_formula(g)) {
                ++failures;
                bad << " " << canonical_code(g) << " engine=(" << b1 << "," << b2
                    << ") formula=(" << b1_formula(g) << "," << b2_formula(g) << ")";
            }
        }
        check(suite, "b1/b2 formulas vs engine on " + std::to_string(n) + "-vertex classes",
              failures == 0, bad.str());
    }
    return suite;
}

SuiteResult verify_b3(const VerifyOptions& opts) {
    SuiteResult suite{"b3", {}};
    Graph fig = example_six_vertex_graph();
    EngineOptions mono = opts.engine;
    mono.method = BettiMethod::Monolithic;
    std::int64_t direct = betti_degree(fig, {}, 3, opts.engine);
    std::int64_t monolithic = betti_degree(fig, {}, 3, mono);
    std::int64_t decomposed = betti_via_decomposition(fig, 3, opts.engine);
    std::int64_t formula = b3_formula(fig);
    check(suite, "six-vertex example b3 three ways = 74",
          direct == 74 && monolithic == 74 && decomposed == 74 && formula == 74,
          "blockwise=" + std::to_string(direct) + " monolithic=" + std::to_string(monolithic) +
              " decomposition=" + std::to_string(decomposed) +
              " formula=" + std::to_string(formula));
    for (int n = 1; n <= std::min(opts.max_vertices, 5); ++n) {
        Graph kn = named_graph("complete", n);
        std::int64_t engine = betti_degree(kn, {}, 3, opts.engine);
        std::int64_t table = b3_formula(kn);
        check(suite, "b3(K" + std::to_string(n) + ") engine vs weighted-count formula",
              engine == table,
              "engine=" + std::to_string(engine) + " formula=" + std::to_string(table));
    }
    for (int n = 1; n <= std::min(opts.max_vertices, 6); ++n) {
        int failures = 0;
        std::ostringstream bad;
        for (const auto& g : graph_isomorphism_classes(n)) {
            if (b3_formula(g) != betti_degree(g, {}, 3, opts.engine)) {
                ++failures;
                bad << " " << canonical_code(g);
            }
        }
        check(suite, "b3 formula vs engine on " + std::to_string(n) + "-vertex classes",
              failures == 0, bad.str());
    }
    return suite;
}

SuiteResult verify_star(const VerifyOptions& opts) {
    SuiteResult suite{"star", {}};
    for (int n = 1; n <= std::min(opts.max_vertices, 5); ++n) {
        Graph sn = named_graph("star", n);
        BettiTable bt = betti(sn, {}, opts.engine);
        bool betti_ok = bt.top_degree() == 2 * n + 1;
        for (int k = 0; k <= 2 * n + 1; ++k) betti_ok &= (bt.at(k) == star_betti(n, k));
        check(suite, "betti(S" + std::to_string(n) + ") matches closed form", betti_ok);

        EssentialTable ess = essential_betti(sn, opts.engine);
        bool ess_ok = true;
        for (int k = 0; k <= 2 * n + 1; ++k) ess_ok &= (ess.at(k) == star_essential(n, k));
        check(suite, "essential(S" + std::to_string(n) + ") matches closed form", ess_ok);

        bool big_ok = true;
        for (int r = 0; r <= n; ++r) big_ok &= (ess.bigraded_at(n, r) == star_bigraded(n, r));
        check(suite, "bigraded(S" + std::to_string(n) + ") at degree n matches closed form",
              big_ok);

        check(suite, "total mass of S" + std::to_string(n) + " = 2 C(2n+1,n)",
              bt.total() == star_total(n),
              "total=" + std::to_string(bt.total()));
    }
    bool arith = true;
    for (int n = 1; n <= 10; ++n) {
        std::int64_t sum = 0;
        for (int k = 0; k <= 2 * n + 1; ++k) sum += star_betti(n, k);
        arith &= (sum == star_total(n));
    }
    check(suite, "sum_k star_betti = star_total for n <= 10", arith);
    return suite;
}

SuiteResult verify_ggi(const VerifyOptions& opts) {
    SuiteResult suite{"ggi", {}};
    {
        Graph g = example_nine_vertex_graph();
        CliqueFamily sigma = example_nine_vertex_cliques();
        auto [reduced, s] = ggi_reduce(g, sigma);
        check(suite, "nine-vertex example reduces to K1 with 4 cliques",
              s == 4 && canonical_code(reduced) == canonical_code(named_graph("complete", 1)));
        BettiTable bt = ggi_betti_reduced(g, sigma, opts.engine);
        bool ok = true;
        for (int d = 0; d <= bt.top_degree(); ++d) ok &= (bt.at(d) == binomial(5, d));
        check(suite, "nine-vertex example Betti = C(5,n)", ok);
    }
    std::mt19937_64 rng(opts.seed);
    int failures = 0;
    std::ostringstream bad;
    for (int i = 0; i < opts.samples; ++i) {
        int n = 1 + static_cast<int>(rng() % opts.max_vertices);
        Graph g = random_graph(n, rng);
        CliqueFamily sigma = random_clique_family(g, 3, rng);
        BettiTable direct = betti(g, sigma, opts.engine);
        BettiTable reduced = ggi_betti_reduced(g, sigma, opts.engine);
        if (!same_betti(direct, reduced)) {
            ++failures;
            bad << " sample" << i << "(" << encode_graph6(g) << ",s=" << sigma.size() << ")";
        }
    }
    check(suite,
          "direct vs reduced on " + std::to_string(opts.samples) + " seeded (G,Sigma) pairs",
          failures == 0, bad.str());
    return suite;
}

SuiteResult verify_duality(const VerifyOptions& opts) {
    SuiteResult suite{"duality", {}};
    for (int n = 0; n <= opts.max_vertices; ++n) {
        int failures = 0;
        std::ostringstream bad;
        for (const auto& g : graph_isomorphism_classes(n)) {
            BettiTable bt = betti(g, {}, opts.engine);
            bool ok = bt.palindromic() && bt.at(0) == 1;
            if (n >= 1) ok &= (bt.euler() == 0);
            if (!ok) {
                ++failures;
                bad << " " << canonical_code(g);
            }
        }
        check(suite, "palindrome/Euler on " + std::to_string(n) + "-vertex classes",
              failures == 0, bad.str());
    }
    return suite;
}

SuiteResult verify_decomposition(const VerifyOptions& opts) {
    SuiteResult suite{"decomposition", {}};
    std::mt19937_64 rng(opts.seed);
    DiskCache memo = DiskCache::memory();
    for (int n = 0; n <= std::min(opts.max_vertices, 5); ++n) {
        int failures = 0;
        std::ostringstream bad;
        for (const auto& g : graph_isomorphism_classes(n)) {
            EngineOptions mono = opts.engine;
            mono.method = BettiMethod::Monolithic;
            EngineOptions memoized = opts.engine;
            memoized.cache = &memo;
            BettiTable block = betti(g, {}, opts.engine);
            BettiTable whole = betti(g, {}, mono);
            bool ok = (block == whole);
            for (int d = 0; ok && d <= block.top_degree(); ++d)
                ok &= (betti_via_decomposition(g, d, memoized) == block.at(d));
            ok &= jacobi_check(g, {});
            ok &= jacobi_check(g, random_clique_family(g, 3, rng));
            if (!ok) {
                ++failures;
                bad << " " << canonical_code(g);
            }
        }
        check(suite,
              "decomposition = blockwise = monolithic on " + std::to_string(n) +
                  "-vertex classes",
              failures == 0, bad.str());
    }
    return suite;
}

SuiteResult verify_figure3(const VerifyOptions& opts) {
    SuiteResult suite{"figure3", {}};
    std::map<CanonicalCode, std::int64_t> sweep;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            std::int64_t b3 = essential_beta_at(g, 3, opts.engine);
            if (b3 != 0) sweep[canonical_code(g)] = b3;
        }
    check(suite, "exactly 23 classes with nonzero third essential cohomology",
          sweep.size() == 23, "got " + std::to_string(sweep.size()));

    std::map<CanonicalCode, std::int64_t> golden;
    std::map<int, int> per_order;
    for (const auto& e : beta3_table()) {
        golden[e.code] = e.beta3;
        ++per_order[e.order];
    }
    check(suite, "sweep equals the golden 23-class table", sweep == golden);
    check(suite, "order profile 2:1 3:4 4:8 5:10",
          per_order == std::map<int, int>{{2, 1}, {3, 4}, {4, 8}, {5, 10}});

    // Figure-caption deltas: the published captions for paw, diamond and K4
    // disagree with the sweep; keep the exact delta pinned as a regression.
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> expected_deltas = {
        {"paw", {3, 6}}, {"diamond", {8, 14}}, {"K4", {14, 26}}};
    bool deltas_ok = true;
    std::ostringstream detail;
    for (const auto& e : beta3_table()) {
        auto it = expected_deltas.find(e.name);
        if (it != expected_deltas.end()) {
            deltas_ok &= (e.beta3 == it->second.first);
            detail << e.name << ": computed " << e.beta3 << ", caption " << it->second.second
                   << "; ";
        }
    }
    check(suite, "caption deltas pinned (computed vs published)", deltas_ok, detail.str());
    return suite;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "b2") return verify_b2(opts);
    if (name == "b3") return verify_b3(opts);
    if (name == "star") return verify_star(opts);
    if (name == "ggi") return verify_ggi(opts);
    if (name == "duality") return verify_duality(opts);
    if (name == "decomposition") return verify_decomposition(opts);
    if (name == "figure3") return verify_figure3(opts);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace graphcoh
