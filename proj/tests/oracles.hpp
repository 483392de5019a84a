#pragma once

// Test-side oracles, deliberately independent of the library's computation
// paths: dense rational elimination instead of sparse fraction-free rank, and
// a structure-constant Chevalley-Eilenberg differential (evaluation formula)
// instead of the Leibniz expansion.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphcoh/complex.hpp"
#include "graphcoh/graph.hpp"

namespace testoracle {

int dense_rank(std::vector<std::vector<std::int64_t>> m);
int dense_rank(const graphcoh::SparseIntMatrix& m);

/// Betti numbers of L(G, Sigma) from the bracket table via
/// (d om)(z_0..z_k) = sum_{a<b} (-1)^(a+b) om([z_a, z_b], z_0..^a..^b..z_k).
std::vector<std::int64_t> ce_betti(const graphcoh::Graph& g,
                                   const graphcoh::CliqueFamily& sigma);

/// Jacobi identity checked on all generator triples of the bracket table.
bool jacobi_structure_constants(const graphcoh::Graph& g, const graphcoh::CliqueFamily& sigma);

/// Reference graph6 encoder written against the published format description.
std::string reference_graph6(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace testoracle
