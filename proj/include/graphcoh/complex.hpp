#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcoh/graph.hpp"

namespace graphcoh {

/// One dual generator of the Cartan-Chevalley-Eilenberg complex of L(G,Sigma).
/// Total order: vertex-duals (by vertex id) < edge-duals (lex pairs) <
/// clique-duals (by ordinal); this order is the basis-ordering contract.
struct GeneratorIndex {
    enum class Kind { Vertex, Edge, Clique };
    Kind kind;
    int vertex = 0;                 // x_i*, 1-indexed
    std::pair<int, int> edge{0, 0}; // x_{i,j}*, i < j
    int clique = 0;                 // y_k*, 1-indexed ordinal

    std::string label() const;
};

/// Sparse integer matrix of a graded differential component. Entries are
/// nonzero, unique per (row, col), sorted by (row, col); 0-indexed in memory,
/// 1-indexed in the dump format.
class SparseIntMatrix {
public:
    struct Entry {
        int row;
        int col;
        std::int64_t value;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols, std::vector<Entry> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    SparseIntMatrix transposed() const;

    /// "rows cols nnz" header then "r c v" triples, 1-indexed, sorted by (r,c).
    std::string dump() const;

    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Entry> entries_;
};

/// Optional (support, weight) restriction for basis and differential blocks.
/// Support means support(m) = S exactly; weight means p + 2q = N exactly.
struct BasisFilter {
    std::optional<VertexSet> support;
    std::optional<int> weight;
};

/// Monomial = strictly increasing sequence of generators, stored as a bitmask
/// over generator indices (generator i <-> bit i).
using Monomial = std::uint64_t;

/// The Cartan-Chevalley-Eilenberg complex of L(G, Sigma): generator tables,
/// monomial bases per degree, and sparse matrices of the differential Q.
class CochainComplex {
public:
    explicit CochainComplex(Graph g, CliqueFamily sigma = {});

    const Graph& graph() const { return g_; }
    const CliqueFamily& cliques() const { return sigma_; }
    int generator_count() const { return gen_count_; }
    GeneratorIndex generator(int index) const;

    VertexSet generator_support(int index) const { return VertexSet(gen_support_[index]); }
    int generator_weight(int index) const { return gen_weight_[index]; }

    VertexSet support(Monomial m) const;
    int weight(Monomial m) const;
    static int degree(Monomial m) { return __builtin_popcountll(m); }
    std::string monomial_label(Monomial m) const;

    /// All degree-sized monomials passing the filter, in lexicographic order
    /// on generator-index sequences.
    std::vector<Monomial> basis(int degree, const BasisFilter& filter = {}) const;

    /// Q(m) expanded by the Leibniz rule, as (target monomial, coefficient)
    /// pairs with coefficients accumulated; deterministic order.
    std::vector<std::pair<Monomial, std::int64_t>> apply_q(Monomial m) const;

    /// Matrix of Q from basis(degree, filter) to basis(degree+1, filter).
    SparseIntMatrix differential(int degree, const BasisFilter& filter = {}) const;

    /// Matrix of Q between explicit bases (used for (S, N) blocks). Every
    /// term of Q on src must land in tgt.
    SparseIntMatrix differential_between(const std::vector<Monomial>& src,
                                         const std::vector<Monomial>& tgt) const;

private:
    Graph g_;
    CliqueFamily sigma_;
    int n_ = 0, m_ = 0, s_ = 0, gen_count_ = 0;
    std::vector<std::uint64_t> gen_support_;
    std::vector<int> gen_weight_;
    std::vector<std::pair<int, int>> edge_vertex_gens_;  // edge gen -> (u-1, v-1)
    std::vector<std::vector<int>> ggi_coef_;             // x-gen index -> per-clique weight
};

/// True iff the bracket of L(G, Sigma) satisfies the Jacobi identity;
/// equivalent to Q^2 = 0, checked on generators (Q^2 is an even derivation,
/// so vanishing on generators forces vanishing everywhere).
bool jacobi_check(const Graph& g, const CliqueFamily& sigma);

}  // namespace graphcoh
