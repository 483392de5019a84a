// Acceptance suite: one criterion per line, exact integer comparisons
// throughout. Returns the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "graphcoh/census.hpp"
#include "graphcoh/closed_forms.hpp"
#include "graphcoh/cohomology.hpp"
#include "graphcoh/verify.hpp"
#include "oracles.hpp"

using namespace graphcoh;

namespace {

struct Criterion {
    std::string name;
    bool passed = true;
    std::string detail;
};

Graph figure_two_graph() {
    return Graph(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}});
}

Graph figure_five_graph() {
    return Graph(9, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 6},
                     {6, 7}, {7, 8}, {7, 9}, {8, 9}});
}

CliqueFamily figure_five_sigma() {
    return CliqueFamily(
        {VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{3, 4, 5}, VertexSet{7, 8, 9}});
}

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// 1. Third essential cohomology sweep: exactly 23 nonzero classes whose
//    values per order match the published catalogue.
Criterion criterion_figure3() {
    Criterion c;
    c.name = "third-essential sweep: 23 classes with the catalogued beta_3 values";
    std::map<int, std::vector<std::int64_t>> sweep;  // order -> sorted values
    std::map<CanonicalCode, std::int64_t> by_code;
    int nonzero = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            std::int64_t b3 = essential_beta_at(g, 3);
            if (b3 != 0) {
                ++nonzero;
                sweep[n].push_back(b3);
                by_code[canonical_code(g)] = b3;
            }
        }
    for (auto& [order, values] : sweep) std::sort(values.begin(), values.end());

    std::map<int, std::vector<std::int64_t>> catalogued = {
        {2, {1}},
        {3, {1, 2, 4, 9}},
        {4, {1, 1, 2, 2, 5, 6, 14, 26}},
        {5, {1, 1, 1, 1, 1, 2, 2, 3, 4, 6}}};

    std::ostringstream detail;
    if (nonzero != 23) {
        c.passed = false;
        detail << "nonzero classes: " << nonzero << " (want 23); ";
    }
    if (sweep != catalogued) {
        c.passed = false;
        for (const auto& [order, values] : catalogued)
            if (sweep[order] != values)
                detail << "order " << order << ": computed {" << join(sweep[order])
                       << "} vs catalogued {" << join(values) << "}; ";
        // name the diverging classes
        for (const auto& e : beta3_table()) {
            auto it = by_code.find(e.code);
            std::int64_t computed = it == by_code.end() ? 0 : it->second;
            if ((e.name == "paw" && computed != 6) || (e.name == "diamond" && computed != 14) ||
                (e.name == "K4" && computed != 26))
                detail << e.name << " computed " << computed << "; ";
        }
    }
    c.detail = detail.str();
    return c;
}

// 2. b_3 of the six-vertex example equals 74 by three independent routes.
Criterion criterion_example_74() {
    Criterion c;
    c.name = "six-vertex example: b_3 = 74 by rank, decomposition, and formula";
    Graph g = figure_two_graph();
    EngineOptions mono;
    mono.method = BettiMethod::Monolithic;
    std::int64_t by_rank = betti_degree(g, {}, 3, mono);
    std::int64_t by_decomposition = betti_via_decomposition(g, 3);
    std::int64_t by_formula = b3_formula(g);
    c.passed = by_rank == 74 && by_decomposition == 74 && by_formula == 74;
    c.detail = "rank=" + std::to_string(by_rank) +
               " decomposition=" + std::to_string(by_decomposition) +
               " formula=" + std::to_string(by_formula);
    return c;
}

// 3. b_1 and b_2 closed forms agree with the rank engine on all 208
//    isomorphism classes with at most 6 vertices.
Criterion criterion_b1_b2() {
    Criterion c;
    c.name = "b_1/b_2 formulas vs engine on all 208 classes (<= 6 vertices)";
    int classes = 0, mismatches = 0;
    std::ostringstream detail;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            ++classes;
            std::int64_t b1 = betti_degree(g, {}, 1);
            std::int64_t b2 = betti_degree(g, {}, 2);
            if (b1 != b1_formula(g) || b2 != b2_formula(g)) {
                ++mismatches;
                detail << canonical_code(g) << " ";
            }
        }
    c.passed = classes == 208 && mismatches == 0;
    c.detail = "classes=" + std::to_string(classes) +
               " mismatches=" + std::to_string(mismatches) +
               (detail.str().empty() ? "" : " at " + detail.str());
    return c;
}

// 4. Star family: Betti, essential, bigraded and total-mass closed forms
//    match the engines for n <= 5.
Criterion criterion_star() {
    Criterion c;
    c.name = "star family closed forms vs engines (n <= 5)";
    std::ostringstream detail;
    for (int n = 1; n <= 5; ++n) {
        BettiTable bt = betti(named_graph("star", n));
        for (int k = 0; k <= 2 * n + 1; ++k)
            if (bt.at(k) != star_betti(n, k)) {
                c.passed = false;
                detail << "b_" << k << "(S" << n << ")=" << bt.at(k) << " formula "
                       << star_betti(n, k) << "; ";
            }
        if (bt.total() != star_total(n)) {
            c.passed = false;
            detail << "t(S" << n << ")=" << bt.total() << " formula " << star_total(n) << "; ";
        }
        EssentialTable ess = essential_betti(named_graph("star", n));
        for (int k = 0; k <= 2 * n + 1; ++k)
            if (ess.at(k) != star_essential(n, k)) {
                c.passed = false;
                detail << "beta_" << k << "(S" << n << ")=" << ess.at(k) << " formula "
                       << star_essential(n, k) << "; ";
            }
        for (int r = 0; r <= n; ++r)
            if (ess.bigraded_at(n, r) != star_bigraded(n, r)) {
                c.passed = false;
                detail << "beta_{" << n << "," << r << "}(S" << n << ")="
                       << ess.bigraded_at(n, r) << " formula " << star_bigraded(n, r) << "; ";
            }
    }
    c.detail = detail.str();
    return c;
}

// 5. b_3(K_n) equals the published binomial combination for n <= 5.
Criterion criterion_b3_complete() {
    Criterion c;
    c.name = "b_3(K_n) equals the published polynomial (n <= 5)";
    std::ostringstream detail;
    for (int n = 1; n <= 5; ++n) {
        std::int64_t engine = betti_degree(named_graph("complete", n), {}, 3);
        std::int64_t published =
            binomial(n, 2) + 9 * binomial(n, 3) + 26 * binomial(n, 4) + 6 * binomial(n, 5);
        if (engine != published) {
            c.passed = false;
            detail << "n=" << n << ": engine=" << engine << " published=" << published
                   << " golden-table formula=" << b3_formula(named_graph("complete", n)) << "; ";
        }
    }
    c.detail = detail.str();
    return c;
}

// 6. Solvable reduction: direct and reduced Betti tables agree on 50 seeded
//    (G, Sigma) pairs, and the nine-vertex example gives C(5, n).
Criterion criterion_ggi() {
    Criterion c;
    c.name = "solvable reduction: direct = reduced on 50 seeded pairs + example";
    std::ostringstream detail;
    std::mt19937_64 rng(20240 /* fixed seed */);
    int mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        int n = 1 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, rng);
        CliqueFamily sigma = random_clique_family(g, 3, rng);
        if (!same_betti(betti(g, sigma), ggi_betti_reduced(g, sigma))) {
            ++mismatches;
            detail << "pair " << i << " (" << encode_graph6(g) << ", s=" << sigma.size() << "); ";
        }
    }
    BettiTable example = ggi_betti_reduced(figure_five_graph(), figure_five_sigma());
    bool example_ok = true;
    for (int d = 0; d <= example.top_degree(); ++d) example_ok &= example.at(d) == binomial(5, d);
    if (!example_ok) detail << "nine-vertex example != C(5,n); ";
    c.passed = mismatches == 0 && example_ok;
    c.detail = "mismatches=" + std::to_string(mismatches) + "; " + detail.str();
    return c;
}

// 7. Structural properties: Q^2 = 0, Jacobi, Euler characteristic zero,
//    Poincare palindromes, Kunneth over disjoint unions.
Criterion criterion_structural() {
    Criterion c;
    c.name = "structural suite: Q^2=0, Jacobi, Euler, duality, Kunneth";
    std::ostringstream detail;
    std::mt19937_64 rng(777);
    int checked = 0;
    for (int n = 0; n <= 5; ++n)
        for (const auto& g : graph_isomorphism_classes(n)) {
            ++checked;
            CliqueFamily sigma = random_clique_family(g, 3, rng);
            if (!jacobi_check(g, sigma) || !jacobi_check(g, {})) {
                c.passed = false;
                detail << "jacobi " << canonical_code(g) << "; ";
            }
            BettiTable bt = betti(g);
            if (!bt.palindromic() || (n >= 1 && bt.euler() != 0)) {
                c.passed = false;
                detail << "duality/euler " << canonical_code(g) << "; ";
            }
            if (n >= 1 && !sigma.empty() && betti(g, sigma).euler() != 0) {
                c.passed = false;
                detail << "euler-sigma " << canonical_code(g) << "; ";
            }
        }
    // Q^2 = 0 as matrices on seeded complexes
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 5), rng);
        CliqueFamily sigma = random_clique_family(g, 2, rng);
        CochainComplex cc(g, sigma);
        for (int d = 0; d + 2 <= cc.generator_count(); ++d) {
            SparseIntMatrix a = cc.differential(d + 1);
            SparseIntMatrix b = cc.differential(d);
            std::map<std::pair<int, int>, std::int64_t> acc;
            std::vector<std::vector<std::pair<int, std::int64_t>>> a_by_col(a.cols());
            for (const auto& e : a.entries()) a_by_col[e.col].emplace_back(e.row, e.value);
            for (const auto& e : b.entries())
                for (auto [row, value] : a_by_col[e.row]) acc[{row, e.col}] += value * e.value;
            for (auto [rc, v] : acc)
                if (v != 0) {
                    c.passed = false;
                    detail << "Q^2 != 0 on " << encode_graph6(g) << " degree " << d << "; ";
                }
        }
    }
    // Kunneth across disjoint unions
    for (int trial = 0; trial < 10; ++trial) {
        Graph a = random_graph(1 + static_cast<int>(rng() % 3), rng);
        Graph b = random_graph(1 + static_cast<int>(rng() % 3), rng);
        if (!same_betti(betti(disjoint_union(a, b)), kunneth(betti(a), betti(b)))) {
            c.passed = false;
            detail << "kunneth " << encode_graph6(a) << "+" << encode_graph6(b) << "; ";
        }
    }
    c.detail = "classes=" + std::to_string(checked) + "; " + detail.str();
    return c;
}

// 8. Blockwise (S, N)-decomposed Betti equals monolithic Betti on 20 seeded
//    graphs, all degrees.
Criterion criterion_blockwise() {
    Criterion c;
    c.name = "blockwise = monolithic on 20 seeded graphs, all degrees";
    std::ostringstream detail;
    std::mt19937_64 rng(4242);
    EngineOptions mono;
    mono.method = BettiMethod::Monolithic;
    int mismatches = 0;
    for (int i = 0; i < 20; ++i) {
        int n = 1 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, rng);
        if (betti(g) != betti(g, {}, mono)) {
            ++mismatches;
            detail << encode_graph6(g) << "; ";
        }
    }
    c.passed = mismatches == 0;
    c.detail = "mismatches=" + std::to_string(mismatches) + "; " + detail.str();
    return c;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    std::vector<Criterion (*)()> criteria = {
        criterion_figure3, criterion_example_74, criterion_b1_b2,  criterion_star,
        criterion_b3_complete, criterion_ggi,    criterion_structural, criterion_blockwise};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Criterion c = criteria[i]();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (!c.passed) ++failures;
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << c.name
                  << "  (" << secs << "s)";
        if (!c.detail.empty()) std::cout << "\n       " << c.detail;
        std::cout << "\n";
    }
    std::cout << (failures ? "ACCEPTANCE: FAILED (" : "ACCEPTANCE: PASSED (")
              << (criteria.size() - failures) << "/" << criteria.size() << " criteria)\n";
    return failures;
}
