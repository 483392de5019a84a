#include "graphcoh/cohomology.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <unordered_map>

#include "graphcoh/census.hpp"
#include "graphcoh/closed_forms.hpp"
#include "graphcoh/rank.hpp"
#include "parallel.hpp"

namespace graphcoh {

std::int64_t BettiTable::total() const {
    std::int64_t t = 0;
    for (auto d : dims) t += d;
    return t;
}

std::int64_t BettiTable::euler() const {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) e += (i % 2 ? -dims[i] : dims[i]);
    return e;
}

bool BettiTable::palindromic() const {
    for (std::size_t i = 0, j = dims.size(); i < j; ++i)
        if (dims[i] != dims[dims.size() - 1 - i]) return false;
    return true;
}

bool same_betti(const BettiTable& a, const BettiTable& b) {
    int top = std::max(a.top_degree(), b.top_degree());
    for (int d = 0; d <= top; ++d)
        if (a.at(d) != b.at(d)) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BlockKey {
    std::uint64_t support;
    int weight;
    bool operator==(const BlockKey&) const = default;
};

struct BlockKeyHash {
    std::size_t operator()(const BlockKey& k) const {
        return std::hash<std::uint64_t>{}(k.support * 0x9e3779b97f4a7c15ull ^
                                          static_cast<std::uint64_t>(k.weight));
    }
};

using DegreeBlocks = std::unordered_map<BlockKey, std::vector<Monomial>, BlockKeyHash>;

DegreeBlocks bucket_degree(const CochainComplex& cc, int degree, const BasisFilter& filter) {
    DegreeBlocks blocks;
    for (Monomial m : cc.basis(degree, filter))
        blocks[{cc.support(m).bits(), cc.weight(m)}].push_back(m);
    return blocks;
}

struct RankJob {
    const std::vector<Monomial>* src;
    const std::vector<Monomial>* tgt;  // may be null (empty target)
    int degree;
    int rank = 0;
};

// Ranks of Q_d for d in [dmin, dmax], blockwise over (S, N).
std::vector<std::int64_t> blockwise_ranks(const CochainComplex& cc, int dmin, int dmax,
                                          const EngineOptions& opts, EngineStats* stats) {
    static const std::vector<Monomial> kEmpty;
    std::vector<DegreeBlocks> blocks;
    blocks.reserve(dmax - dmin + 2);
    for (int d = dmin; d <= dmax + 1; ++d) blocks.push_back(bucket_degree(cc, d, {}));

    std::vector<RankJob> jobs;
    for (int d = dmin; d <= dmax; ++d) {
        for (const auto& [key, src] : blocks[d - dmin]) {
            const auto& tgt_map = blocks[d - dmin + 1];
            auto it = tgt_map.find(key);
            jobs.push_back({&src, it == tgt_map.end() ? &kEmpty : &it->second, d});
        }
    }
    parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
        RankJob& job = jobs[i];
        SparseIntMatrix m = cc.differential_between(*job.src, *job.tgt);
        job.rank = m.nnz() == 0 ? 0 : rank_exact(m).rank;
    });
    std::vector<std::int64_t> ranks(dmax - dmin + 1, 0);
    for (const auto& job : jobs) {
        ranks[job.degree - dmin] += job.rank;
        if (stats) {
            ++stats->blocks;
            ++stats->rank_calls;
            stats->max_block_cols =
                std::max<std::int64_t>(stats->max_block_cols, job.src->size());
        }
    }
    return ranks;
}

std::vector<std::int64_t> monolithic_ranks(const CochainComplex& cc, int dmin, int dmax,
                                           const EngineOptions& opts, EngineStats* stats) {
    std::vector<std::int64_t> ranks(dmax - dmin + 1, 0);
    parallel_for(ranks.size(), opts.threads, [&](std::size_t i) {
        SparseIntMatrix m = cc.differential(dmin + static_cast<int>(i));
        ranks[i] = m.nnz() == 0 ? 0 : rank_exact(m).rank;
    });
    if (stats) {
        stats->rank_calls += static_cast<std::int64_t>(ranks.size());
        for (int d = dmin; d <= dmax; ++d)
            stats->max_block_cols = std::max(stats->max_block_cols, binomial(cc.generator_count(), d));
    }
    return ranks;
}

std::vector<std::int64_t> differential_ranks(const CochainComplex& cc, int dmin, int dmax,
                                             const EngineOptions& opts, EngineStats* stats) {
    if (dmax < dmin) return {};
    return opts.method == BettiMethod::Monolithic ? monolithic_ranks(cc, dmin, dmax, opts, stats)
                                                  : blockwise_ranks(cc, dmin, dmax, opts, stats);
}

}  // namespace

BettiTable betti(const Graph& g, const CliqueFamily& sigma, const EngineOptions& opts,
                 EngineStats* stats) {
    auto t0 = Clock::now();
    CochainComplex cc(g, sigma);
    int top = cc.generator_count();
    auto ranks = differential_ranks(cc, 0, top - 1, opts, stats);  // empty when top == 0
    BettiTable out;
    out.dims.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        std::int64_t rd = d < top ? ranks[d] : 0;
        std::int64_t rprev = d > 0 ? ranks[d - 1] : 0;
        out.dims[d] = binomial(top, d) - rd - rprev;
    }
    if (stats)
        stats->elapsed_ms +=
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return out;
}

std::int64_t betti_degree(const Graph& g, const CliqueFamily& sigma, int degree,
                          const EngineOptions& opts, EngineStats* stats) {
    CochainComplex cc(g, sigma);
    int top = cc.generator_count();
    if (degree < 0 || degree > top) return 0;
    int dmin = std::max(0, degree - 1), dmax = std::min(degree, top - 1);
    auto ranks = differential_ranks(cc, dmin, dmax, opts, stats);
    auto rank_at = [&](int d) -> std::int64_t {
        return (d < dmin || d > dmax) ? 0 : ranks[d - dmin];
    };
    return binomial(top, degree) - rank_at(degree) - rank_at(degree - 1);
}

namespace {

// Essential blocks: support fixed to V(G), bucketed by weight N.
struct EssentialBlockRanks {
    // (N, d) -> rank of Q_d on the weight-N essential block
    std::map<std::pair<int, int>, std::int64_t> ranks;
    std::map<std::pair<int, int>, std::int64_t> dims;  // (N, d) -> block dimension
};

EssentialBlockRanks essential_ranks(const CochainComplex& cc, int dmin, int dmax,
                                    const EngineOptions& opts, EngineStats* stats) {
    VertexSet full = cc.graph().vertex_set();
    BasisFilter filter{full, std::nullopt};
    std::map<std::pair<int, int>, std::vector<Monomial>> by_nd;  // (N, d) -> basis
    for (int d = std::max(0, dmin); d <= dmax + 1; ++d)
        for (Monomial m : cc.basis(d, filter)) by_nd[{cc.weight(m), d}].push_back(m);

    EssentialBlockRanks out;
    for (const auto& [nd, basis] : by_nd) out.dims[nd] = static_cast<std::int64_t>(basis.size());

    static const std::vector<Monomial> kEmpty;
    struct Job {
        int N, d;
        const std::vector<Monomial>*src, *tgt;
        int rank = 0;
    };
    std::vector<Job> jobs;
    for (const auto& [nd, basis] : by_nd) {
        auto [N, d] = nd;
        if (d > dmax) continue;
        auto it = by_nd.find({N, d + 1});
        jobs.push_back({N, d, &basis, it == by_nd.end() ? &kEmpty : &it->second});
    }
    parallel_for(jobs.size(), opts.threads, [&](std::size_t i) {
        Job& job = jobs[i];
        SparseIntMatrix m = cc.differential_between(*job.src, *job.tgt);
        job.rank = m.nnz() == 0 ? 0 : rank_exact(m).rank;
    });
    for (const auto& job : jobs) {
        out.ranks[{job.N, job.d}] = job.rank;
        if (stats) {
            ++stats->blocks;
            ++stats->rank_calls;
            stats->max_block_cols =
                std::max<std::int64_t>(stats->max_block_cols, job.src->size());
        }
    }
    return out;
}

}  // namespace

EssentialTable essential_betti(const Graph& g, const EngineOptions& opts, EngineStats* stats) {
    CochainComplex cc(g, {});
    int top = cc.generator_count();
    auto blocks = essential_ranks(cc, 0, top - 1, opts, stats);
    EssentialTable out;
    out.dims.assign(top + 1, 0);
    auto rank_at = [&](int N, int d) -> std::int64_t {
        auto it = blocks.ranks.find({N, d});
        return it == blocks.ranks.end() ? 0 : it->second;
    };
    for (const auto& [nd, dim] : blocks.dims) {
        auto [N, d] = nd;
        std::int64_t beta = dim - rank_at(N, d) - (d > 0 ? rank_at(N, d - 1) : 0);
        if (beta != 0) {
            out.dims[d] += beta;
            out.bigraded[{d, N - d}] += beta;  // N = degree + #edge-duals
        }
    }
    return out;
}

std::int64_t essential_beta_at(const Graph& g, int degree, const EngineOptions& opts) {
    CochainComplex cc(g, {});
    int top = cc.generator_count();
    if (degree < 0 || degree > top) return 0;
    auto blocks = essential_ranks(cc, std::max(0, degree - 1), std::min(degree, top - 1), opts,
                                  nullptr);
    std::int64_t beta = 0;
    auto rank_at = [&](int N, int d) -> std::int64_t {
        auto it = blocks.ranks.find({N, d});
        return it == blocks.ranks.end() ? 0 : it->second;
    };
    for (const auto& [nd, dim] : blocks.dims) {
        auto [N, d] = nd;
        if (d != degree) continue;
        beta += dim - rank_at(N, d) - (d > 0 ? rank_at(N, d - 1) : 0);
    }
    return beta;
}

std::int64_t betti_via_decomposition(const Graph& g, int degree, const EngineOptions& opts,
                                     EngineStats* stats) {
    if (degree < 0) return 0;
    if (degree == 0) return 1;  // the empty-support class contributes exactly the constants
    int max_order = std::min(g.vertex_count(), 2 * degree - 1);
    Census c = census(g, max_order);
    std::string kind = "essential@" + std::to_string(degree);
    std::int64_t total = 0;
    for (const auto& [code, count] : c.counts) {
        std::int64_t beta;
        std::optional<std::vector<std::int64_t>> cached;
        if (opts.cache && opts.cache->enabled()) cached = opts.cache->get(kind, code);
        if (cached) {
            beta = cached->at(0);
            if (stats) ++stats->cache_hits;
        } else {
            beta = essential_beta_at(graph_from_code(code), degree, opts);
            if (opts.cache && opts.cache->enabled()) opts.cache->put(kind, code, {beta});
            if (stats) ++stats->cache_misses;
        }
        total += count * beta;
    }
    return total;
}

BettiTable kunneth(const BettiTable& a, const BettiTable& b) {
    BettiTable out;
    if (a.dims.empty() || b.dims.empty()) return out;
    out.dims.assign(a.dims.size() + b.dims.size() - 1, 0);
    for (std::size_t i = 0; i < a.dims.size(); ++i)
        for (std::size_t j = 0; j < b.dims.size(); ++j) out.dims[i + j] += a.dims[i] * b.dims[j];
    return out;
}

std::pair<Graph, int> ggi_reduce(const Graph& g, const CliqueFamily& sigma) {
    sigma.validate_for(g);
    VertexSet covered;
    for (const auto& c : sigma.cliques()) covered = covered.unite(c);
    return {induced_subgraph(g, g.vertex_set().minus(covered)), sigma.size()};
}

BettiTable ggi_betti_reduced(const Graph& g, const CliqueFamily& sigma,
                             const EngineOptions& opts, EngineStats* stats) {
    auto [reduced, s] = ggi_reduce(g, sigma);
    BettiTable base = betti(reduced, {}, opts, stats);
    BettiTable binomials;
    binomials.dims.resize(s + 1);
    for (int i = 0; i <= s; ++i) binomials.dims[i] = binomial(s, i);
    BettiTable out = kunneth(base, binomials);
    out.dims.resize(g.vertex_count() + g.edge_count() + sigma.size() + 1, 0);
    return out;
}

}  // namespace graphcoh
