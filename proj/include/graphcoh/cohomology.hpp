#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "graphcoh/cache.hpp"
#include "graphcoh/complex.hpp"
#include "graphcoh/graph.hpp"

namespace graphcoh {

/// Degree-indexed cohomology dimensions, b_d at index d.
struct BettiTable {
    std::vector<std::int64_t> dims;

    std::int64_t at(int d) const {
        return (d >= 0 && d < static_cast<int>(dims.size())) ? dims[d] : 0;
    }
    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    std::int64_t total() const;
    std::int64_t euler() const;  // sum (-1)^d b_d
    bool palindromic() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Equality ignoring trailing zeros (tables of different declared length).
bool same_betti(const BettiTable& a, const BettiTable& b);

/// Essential cohomology: beta_d plus its bigraded refinement beta_{d,r},
/// where r counts edge-dual factors (weight N = d + r).
struct EssentialTable {
    std::vector<std::int64_t> dims;
    std::map<std::pair<int, int>, std::int64_t> bigraded;  // (degree, r) -> dim

    std::int64_t at(int d) const {
        return (d >= 0 && d < static_cast<int>(dims.size())) ? dims[d] : 0;
    }
    std::int64_t bigraded_at(int d, int r) const {
        auto it = bigraded.find({d, r});
        return it == bigraded.end() ? 0 : it->second;
    }
};

enum class BettiMethod {
    Blockwise,   // per-(S, N) blocks, the default
    Monolithic,  // unfiltered degree matrices, for cross-validation
};

struct EngineOptions {
    BettiMethod method = BettiMethod::Blockwise;
    int threads = 0;  // 0 = hardware concurrency
    DiskCache* cache = nullptr;
};

struct EngineStats {
    std::int64_t blocks = 0;
    std::int64_t rank_calls = 0;
    std::int64_t max_block_cols = 0;
    std::int64_t cache_hits = 0;
    std::int64_t cache_misses = 0;
    double elapsed_ms = 0.0;
};

/// Betti table of L(G, Sigma), degrees 0..n+|E|+s, by exact rank.
BettiTable betti(const Graph& g, const CliqueFamily& sigma = {},
                 const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// Single b_degree without computing the rest of the table.
std::int64_t betti_degree(const Graph& g, const CliqueFamily& sigma, int degree,
                          const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// Essential (and bigraded essential) cohomology of the Dani-Mainkar algebra;
/// Sigma must be empty by definition.
EssentialTable essential_betti(const Graph& g, const EngineOptions& opts = {},
                               EngineStats* stats = nullptr);

/// beta_degree alone (support-filtered complex at three degrees only).
std::int64_t essential_beta_at(const Graph& g, int degree,
                               const EngineOptions& opts = {});

/// b_degree as the census-weighted sum of essential cohomologies of induced
/// subgraph classes on at most 2*degree-1 vertices (memoized by canonical
/// code when opts.cache is set). Must equal betti(g, {})[degree].
std::int64_t betti_via_decomposition(const Graph& g, int degree,
                                     const EngineOptions& opts = {},
                                     EngineStats* stats = nullptr);

/// Convolution out[d] = sum_{j+k=d} a[j]*b[k].
BettiTable kunneth(const BettiTable& a, const BettiTable& b);

/// (G~, |Sigma|): the induced subgraph on the vertices in no clique of Sigma.
std::pair<Graph, int> ggi_reduce(const Graph& g, const CliqueFamily& sigma);

/// Betti table of L(G, Sigma) through the reduction to L(G~ + |Sigma| K1).
BettiTable ggi_betti_reduced(const Graph& g, const CliqueFamily& sigma,
                             const EngineOptions& opts = {}, EngineStats* stats = nullptr);

}  // namespace graphcoh
