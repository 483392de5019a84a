#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphcoh/cohomology.hpp"
#include "graphcoh/graph.hpp"

namespace graphcoh {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // empty when uninteresting
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    int failures() const;
};

struct VerifyOptions {
    int max_vertices = 5;
    std::uint64_t seed = 1;
    int samples = 50;
    EngineOptions engine;
};

/// Seeded samplers shared by the verify suites and tests.
Graph random_graph(int n, std::mt19937_64& rng);
CliqueFamily random_clique_family(const Graph& g, int max_cliques, std::mt19937_64& rng);

/// b1/b2 closed forms vs the rank engine over every isomorphism class with
/// <= max_vertices vertices.
SuiteResult verify_b2(const VerifyOptions& opts);

/// b3: golden-table formula vs decomposition vs monolithic rank on the
/// spec'd workloads (6-vertex example graph, K_n).
SuiteResult verify_b3(const VerifyOptions& opts);

/// Star family closed forms vs the engine for n <= max (betti, essential,
/// bigraded, total mass).
SuiteResult verify_star(const VerifyOptions& opts);

/// Direct vs reduced GGI Betti tables on seeded (G, Sigma) pairs.
SuiteResult verify_ggi(const VerifyOptions& opts);

/// Poincare-duality palindromes for Sigma = {} over all classes.
SuiteResult verify_duality(const VerifyOptions& opts);

/// betti_via_decomposition == betti, plus blockwise == monolithic, on seeded
/// graphs; Euler characteristic, Q^2 = 0 and jacobi_check along the way.
SuiteResult verify_decomposition(const VerifyOptions& opts);

/// Full sweep of third essential cohomology over classes on 1..5 vertices;
/// checks the 23-class golden table and reports the figure-caption deltas.
SuiteResult verify_figure3(const VerifyOptions& opts);

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace graphcoh
