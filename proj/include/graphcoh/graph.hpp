#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphcoh {

/// Thrown by the text-format parsers; `offset` is the byte position of the
/// first offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset_)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    std::size_t offset;
};

/// Subset of a 1-indexed vertex range, bitset semantics. Vertex v occupies
/// bit v-1; at most 64 vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        return VertexSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
    }

    void insert(int v) { bits_ |= bit(v); }
    void erase(int v) { bits_ &= ~bit(v); }
    bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    VertexSet unite(VertexSet other) const { return VertexSet(bits_ | other.bits_); }
    VertexSet intersect(VertexSet other) const { return VertexSet(bits_ & other.bits_); }
    VertexSet minus(VertexSet other) const { return VertexSet(bits_ & ~other.bits_); }

    /// Members in ascending order, 1-indexed.
    std::vector<int> vertices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    static std::uint64_t bit(int v) {
        if (v < 1 || v > 64) throw std::out_of_range("vertex out of range 1..64");
        return std::uint64_t{1} << (v - 1);
    }
    std::uint64_t bits_ = 0;
};

/// Finite simple graph on vertices 1..n. Edges are stored as sorted pairs
/// (i < j) in lexicographic order; no loops, no duplicates.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    VertexSet vertex_set() const { return VertexSet::full(n_); }
    bool is_clique(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;  // neighbor bitmask per vertex (0-indexed)
};

/// Ordered multiset of cliques of a host graph (the GGI datum Sigma).
class CliqueFamily {
public:
    CliqueFamily() = default;
    explicit CliqueFamily(std::vector<VertexSet> cliques) : cliques_(std::move(cliques)) {}

    int size() const { return static_cast<int>(cliques_.size()); }
    bool empty() const { return cliques_.empty(); }
    const std::vector<VertexSet>& cliques() const { return cliques_; }
    const VertexSet& operator[](int k) const { return cliques_[k]; }
    void push_back(VertexSet s) { cliques_.push_back(s); }

    /// Every member must be a nonempty clique of g.
    void validate_for(const Graph& g) const;

private:
    std::vector<VertexSet> cliques_;
};

// --- parsing / encoding ---------------------------------------------------

/// Standard graph6 short form, up to 62 vertices. Accepts an optional
/// ">>graph6<<" header and trailing whitespace; anything else is an error.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "n <count>" then one "u v" line per edge; duplicates (in either order)
/// are merged. Blank lines are allowed.
Graph parse_edge_list(std::string_view text);

/// family in {complete, star, path, cycle, empty}; star(n) has n+1 vertices
/// with center 1, cycle requires n >= 3.
Graph named_graph(std::string_view family, int n);

/// CLI grammar: "name:K5", "name:S2+K1", "g6:D?{", "file:path" (edge list or
/// graph6, sniffed by content).
Graph parse_graph_spec(std::string_view spec);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Vertices of s relabeled 1..|s| preserving order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// All k-subsets inducing complete subgraphs, lexicographic order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int k);

// --- canonical forms --------------------------------------------------------

inline constexpr int kCanonicalMaxOrder = 9;

/// graph6 string of the lexicographically minimal relabeling of g; equal
/// codes iff isomorphic. Exhaustive permutation minimization, so g must have
/// at most max_order vertices.
using CanonicalCode = std::string;
CanonicalCode canonical_code(const Graph& g, int max_order = kCanonicalMaxOrder);

/// Decode a canonical code back to its representative graph.
Graph graph_from_code(const CanonicalCode& code);

/// One representative per isomorphism class on exactly n vertices, sorted by
/// canonical code.
std::vector<Graph> graph_isomorphism_classes(int n);

}  // namespace graphcoh
