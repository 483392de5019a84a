#include "graphcoh/closed_forms.hpp"

#include <stdexcept>

#include "graphcoh/census.hpp"

namespace graphcoh {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n > 62) throw std::invalid_argument("binomial argument too large for int64");
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t b1_formula(const Graph& g) { return g.vertex_count(); }

std::int64_t b2_formula(const Graph& g) {
    std::int64_t deg_sq = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        deg_sq += d * d;
    }
    std::int64_t triangles = static_cast<std::int64_t>(enumerate_cliques(g, 3).size());
    return binomial(g.vertex_count(), 2) + deg_sq / 2 - triangles;
}

const std::array<Beta3Entry, 23>& beta3_table() {
    static const std::array<Beta3Entry, 23> table = [] {
        auto entry = [](const Graph& g, std::string name, std::int64_t beta3) {
            return Beta3Entry{canonical_code(g), std::move(name), beta3, g.vertex_count()};
        };
        Graph k2 = named_graph("complete", 2);
        Graph k3 = named_graph("complete", 3);
        // Values frozen from the brute-force sweep of the essential engine
        // over every isomorphism class on at most five vertices.
        return std::array<Beta3Entry, 23>{
            entry(k2, "K2", 1),
            entry(named_graph("empty", 3), "3K1", 1),
            entry(disjoint_union(k2, named_graph("empty", 1)), "K2+K1", 2),
            entry(named_graph("path", 3), "P3", 4),
            entry(k3, "K3", 9),
            entry(disjoint_union(named_graph("path", 3), named_graph("empty", 1)), "P3+K1", 1),
            entry(named_graph("path", 4), "P4", 1),
            entry(named_graph("cycle", 4), "C4", 5),
            entry(disjoint_union(k3, named_graph("empty", 1)), "K3+K1", 2),
            entry(named_graph("star", 3), "S3", 2),
            entry(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}), "paw", 3),
            entry(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), "diamond", 8),
            entry(named_graph("complete", 4), "K4", 14),
            entry(Graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}), "K2,3", 1),
            entry(Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}), "book", 1),
            entry(named_graph("cycle", 5), "C5", 1),
            entry(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}}), "house", 1),
            entry(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}), "gem", 1),
            entry(Graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}), "K2,3+e", 2),
            entry(Graph(5, {{1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}),
                  "K5-P3", 2),
            entry(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}),
                  "W4", 3),
            entry(Graph(5,
                        {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
                  "K5-e", 4),
            entry(named_graph("complete", 5), "K5", 6),
        };
    }();
    return table;
}

nlohmann::json beta3_table_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : beta3_table())
        out.push_back({{"code", e.code}, {"name", e.name}, {"beta3", e.beta3}});
    return out;
}

std::int64_t b3_formula(const Graph& g) {
    std::int64_t total = 0;
    for (const auto& e : beta3_table()) {
        if (e.order > g.vertex_count()) continue;
        total += e.beta3 * count_induced(g, graph_from_code(e.code));
    }
    return total;
}

std::int64_t star_betti(int n, int k) {
    if (n < 0 || k < 0) return 0;
    return binomial(n + 1, (k + 1) / 2) * binomial(n, k / 2);
}

std::int64_t star_essential(int n, int k) {
    if (n < 1) throw std::invalid_argument("star_essential requires n >= 1");
    if (k < n || k > 2 * n + 1) return 0;
    if (k == n) return binomial(n, n / 2) - 1;
    int m = 2 * n - k;
    // zero-binomial convention covers k = 2n+1 (m = -1) without special-casing
    return binomial(m, m >= 0 ? m / 2 : 0) * binomial(n, m) +
           binomial(m + 1, m + 1 >= 0 ? (m + 1) / 2 : 0) * binomial(n, m + 1);
}

std::int64_t star_total(int n) {
    if (n < 1) throw std::invalid_argument("star_total requires n >= 1");
    return 2 * binomial(2 * n + 1, n);
}

std::int64_t star_bigraded(int n, int r) {
    if (n < 1) throw std::invalid_argument("star_bigraded requires n >= 1");
    if (r < 1 || 2 * r > n) return 0;
    return binomial(n, r) - binomial(n, r - 1);
}

std::int64_t ggi_bn_formula(const BettiTable& b_tilde, int s, int n) {
    if (s < 0) throw std::invalid_argument("clique count must be nonnegative");
    std::int64_t total = 0;
    for (int l = 0; l <= n; ++l) total += b_tilde.at(l) * binomial(s, n - l);
    return total;
}

}  // namespace graphcoh
