#include "graphcoh/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace graphcoh {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0 || n > 64) throw std::invalid_argument("vertex count must be in 0..64");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, 0);
    for (auto [u, v] : edges_) {
        adj_[u - 1] |= std::uint64_t{1} << (v - 1);
        adj_[v - 1] |= std::uint64_t{1} << (u - 1);
    }
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    return (adj_[u - 1] >> (v - 1)) & 1;
}

int Graph::degree(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
    return __builtin_popcountll(adj_[v - 1]);
}

VertexSet Graph::neighbors(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
    return VertexSet(adj_[v - 1]);
}

bool Graph::is_clique(VertexSet s) const {
    if (!s.subset_of(vertex_set())) return false;
    auto vs = s.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!adjacent(vs[i], vs[j])) return false;
    return true;
}

void CliqueFamily::validate_for(const Graph& g) const {
    for (const auto& c : cliques_) {
        if (c.empty()) throw std::invalid_argument("empty clique in family");
        if (!c.subset_of(g.vertex_set()))
            throw std::invalid_argument("clique contains a vertex outside the graph");
        if (!g.is_clique(c))
            throw std::invalid_argument("clique member does not induce a complete subgraph");
    }
}

// --- graph6 -----------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

// Bit positions follow the format: column-major upper triangle,
// x(0,1), x(0,2), x(1,2), x(0,3), ...
std::size_t g6_bit_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos += kGraph6Header.size();
    else if (!text.empty() && text[0] == '>')
        throw ParseError("malformed graph6 header", 0);

    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                         text[end - 1] == ' ' || text[end - 1] == '\t'))
        --end;
    if (pos >= end) throw ParseError("empty graph6 string", pos);

    unsigned char nb = static_cast<unsigned char>(text[pos]);
    if (nb == 126) throw ParseError("long-form graph6 (>= 63 vertices) not supported", pos);
    if (nb < 63 || nb > 125) throw ParseError("graph6 byte out of range", pos);
    int n = nb - 63;
    ++pos;

    std::size_t nbits = n >= 2 ? g6_bit_count(n) : 0;
    std::size_t nbytes = (nbits + 5) / 6;
    if (end - pos < nbytes) throw ParseError("graph6 string truncated", end);
    if (end - pos > nbytes) throw ParseError("trailing garbage after graph6 data", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char b = static_cast<unsigned char>(text[pos + bit / 6]);
            if (b < 63 || b > 126) throw ParseError("graph6 byte out of range", pos + bit / 6);
            if ((b - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i + 1, j + 1);
        }
    }
    // padding bits must be zero
    for (; bit < nbytes * 6; ++bit) {
        unsigned char b = static_cast<unsigned char>(text[pos + bit / 6]);
        if (b < 63 || b > 126) throw ParseError("graph6 byte out of range", pos + bit / 6);
        if ((b - 63) >> (5 - bit % 6) & 1)
            throw ParseError("nonzero padding bit in graph6 data", pos + bit / 6);
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6 short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    std::size_t nbits = n >= 2 ? g6_bit_count(n) : 0;
    std::vector<unsigned char> bytes((nbits + 5) / 6, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i + 1, j + 1)) bytes[bit / 6] |= 1u << (5 - bit % 6);
    for (unsigned char b : bytes) out.push_back(static_cast<char>(b + 63));
    return out;
}

// --- edge-list text ----------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    auto skip_blanks = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto read_int = [&](const char* what) -> long {
        skip_blanks();
        long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos)
            throw ParseError(std::string("expected ") + what, pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };

    // header "n <count>"
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) ++pos;
    skip_blanks();
    if (pos >= text.size() || text[pos] != 'n')
        throw ParseError("edge list must start with \"n <count>\"", pos);
    ++pos;
    long n = read_int("vertex count");
    if (n < 0 || n > 64) throw ParseError("vertex count out of range 0..64", pos);

    std::vector<std::pair<int, int>> edges;
    while (true) {
        skip_blanks();
        while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) {
            ++pos;
            skip_blanks();
        }
        if (pos >= text.size()) break;
        std::size_t line_start = pos;
        long u = read_int("vertex id");
        long v = read_int("vertex id");
        skip_blanks();
        if (pos < text.size() && text[pos] != '\n' && text[pos] != '\r')
            throw ParseError("expected end of line after edge", pos);
        if (u == v) throw ParseError("self-loop " + std::to_string(u), line_start);
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("vertex out of range 1.." + std::to_string(n), line_start);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

// --- named families ----------------------------------------------------------

Graph named_graph(std::string_view family, int n) {
    if (n < 0) throw std::invalid_argument("family size must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    if (family == "complete") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
        return Graph(n, std::move(edges));
    }
    if (family == "star") {
        for (int k = 2; k <= n + 1; ++k) edges.emplace_back(1, k);
        return Graph(n + 1, std::move(edges));
    }
    if (family == "path") {
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        return Graph(n, std::move(edges));
    }
    if (family == "cycle") {
        if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(1, n);
        return Graph(n, std::move(edges));
    }
    if (family == "empty") return Graph(n, {});
    throw std::invalid_argument("unknown graph family: " + std::string(family));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> edges = g1.edges();
    int shift = g1.vertex_count();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(shift + g2.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertex_set()))
        throw std::invalid_argument("subset contains a vertex outside the graph");
    auto vs = s.vertices();
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < vs.size(); ++i) relabel[vs[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] && relabel[v]) edges.emplace_back(relabel[u], relabel[v]);
    return Graph(static_cast<int>(vs.size()), std::move(edges));
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be positive");
    std::vector<VertexSet> out;
    int n = g.vertex_count();
    if (k > n) return out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        VertexSet s;
        for (int v : pick) s.insert(v);
        if (g.is_clique(s)) out.push_back(s);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// --- graph spec grammar -------------------------------------------------------

namespace {

Graph parse_named_spec(std::string_view body) {
    // "<family letter><n>" joined by '+', e.g. "S2+K1"
    static const std::map<char, std::string> kFamilies = {
        {'K', "complete"}, {'S', "star"}, {'P', "path"}, {'C', "cycle"}, {'E', "empty"}};
    Graph acc(0, {});
    std::size_t pos = 0;
    bool first = true;
    while (pos < body.size()) {
        char f = body[pos];
        auto it = kFamilies.find(f);
        if (it == kFamilies.end())
            throw ParseError("unknown family letter in graph spec", pos);
        ++pos;
        int value = 0;
        auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
        if (ec != std::errc() || ptr == body.data() + pos)
            throw ParseError("expected family size", pos);
        pos = static_cast<std::size_t>(ptr - body.data());
        Graph g = named_graph(it->second, value);
        acc = first ? g : disjoint_union(acc, g);
        first = false;
        if (pos < body.size()) {
            if (body[pos] != '+') throw ParseError("expected '+' between family terms", pos);
            ++pos;
        }
    }
    if (first) throw ParseError("empty named graph spec", 0);
    return acc;
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
    if (spec.rfind("name:", 0) == 0) return parse_named_spec(spec.substr(5));
    if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
    if (spec.rfind("file:", 0) == 0) {
        std::string path(spec.substr(5));
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open graph file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string content = ss.str();
        // sniff: edge lists start with an 'n' header
        std::size_t i = content.find_first_not_of(" \t\r\n");
        if (i != std::string::npos && content[i] == 'n') return parse_edge_list(content);
        return parse_graph6(content);
    }
    throw std::invalid_argument("graph spec must start with name:, g6: or file:");
}

// --- canonical form -----------------------------------------------------------

namespace {

// graph6 bit order as a 64-bit word, MSB-aligned comparison not needed:
// we store bit t of the upper triangle at position (nbits-1-t) so that the
// lexicographically smallest bitstring is the numerically smallest word.
std::uint64_t relabeled_bits(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    std::uint64_t bits = 0;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.adjacent(perm[i] + 1, perm[j] + 1))
                bits |= std::uint64_t{1} << (nbits - 1 - t);
    return bits;
}

Graph graph_from_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> edges;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (bits >> (nbits - 1 - t) & 1) edges.emplace_back(i + 1, j + 1);
    return Graph(n, std::move(edges));
}

}  // namespace

CanonicalCode canonical_code(const Graph& g, int max_order) {
    int n = g.vertex_count();
    if (n > max_order)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " exceeds canonical-code limit " + std::to_string(max_order));
    if (n <= 1) return encode_graph6(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, relabeled_bits(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return encode_graph6(graph_from_bits(n, best));
}

Graph graph_from_code(const CanonicalCode& code) { return parse_graph6(code); }

std::vector<Graph> graph_isomorphism_classes(int n) {
    if (n == 0) return {Graph(0, {})};
    std::map<CanonicalCode, Graph> classes;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
        Graph g = graph_from_bits(n, mask);
        CanonicalCode code = canonical_code(g);
        classes.emplace(code, std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace graphcoh
