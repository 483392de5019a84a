#include "graphcoh/census.hpp"

#include <mutex>
#include <numeric>

namespace graphcoh {

namespace {

// iterate k-subsets of 1..n in lexicographic order
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k > n || k < 0) return;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        VertexSet s;
        for (int v : pick) s.insert(v);
        fn(s);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

Census census(const Graph& g, int max_order, int canonical_limit) {
    if (max_order > canonical_limit)
        throw std::invalid_argument("census order " + std::to_string(max_order) +
                                    " exceeds canonical-code limit " +
                                    std::to_string(canonical_limit));
    Census out;
    out.max_order = max_order;
    int n = g.vertex_count();
    for (int k = 1; k <= std::min(max_order, n); ++k)
        for_each_subset(n, k, [&](VertexSet s) {
            ++out.counts[canonical_code(induced_subgraph(g, s), canonical_limit)];
        });
    return out;
}

std::int64_t count_induced(const Graph& g, const Graph& h, int canonical_limit) {
    if (h.vertex_count() > canonical_limit)
        throw std::invalid_argument("pattern order exceeds canonical-code limit");
    int k = h.vertex_count();
    if (k > g.vertex_count()) return 0;
    if (k == 0) return 1;
    CanonicalCode target = canonical_code(h, canonical_limit);
    std::int64_t count = 0;
    for_each_subset(g.vertex_count(), k, [&](VertexSet s) {
        if (canonical_code(induced_subgraph(g, s), canonical_limit) == target) ++count;
    });
    return count;
}

const std::map<CanonicalCode, std::string>& graph_name_registry() {
    static const std::map<CanonicalCode, std::string> registry = [] {
        std::map<CanonicalCode, std::string> reg;
        auto add = [&reg](const Graph& g, const std::string& name) {
            reg.emplace(canonical_code(g), name);  // first name wins
        };
        for (int n = 1; n <= 7; ++n) add(named_graph("complete", n), "K" + std::to_string(n));
        for (int n = 2; n <= 7; ++n)
            add(named_graph("empty", n), std::to_string(n) + "K1");
        for (int n = 2; n <= 7; ++n) add(named_graph("path", n), "P" + std::to_string(n));
        for (int n = 3; n <= 7; ++n) add(named_graph("cycle", n), "C" + std::to_string(n));
        for (int n = 1; n <= 6; ++n) add(named_graph("star", n), "S" + std::to_string(n));
        add(disjoint_union(named_graph("complete", 2), named_graph("empty", 1)), "K2+K1");
        add(disjoint_union(named_graph("path", 3), named_graph("empty", 1)), "P3+K1");
        add(disjoint_union(named_graph("complete", 3), named_graph("empty", 1)), "K3+K1");
        add(disjoint_union(named_graph("complete", 2), named_graph("complete", 2)), "2K2");
        add(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}), "paw");
        add(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), "diamond");
        add(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}}), "bull");
        add(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}}), "butterfly");
        add(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}}), "house");
        add(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}), "gem");
        add(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}), "W4");
        add(Graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}), "K2,3");
        add(Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}), "book");
        add(Graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}}), "K2,3+e");
        add(Graph(5, {{1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}), "K5-P3");
        add(Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
            "K5-e");
        return reg;
    }();
    return registry;
}

nlohmann::json census_report(const Census& c) {
    const auto& names = graph_name_registry();
    // (order, code) sort; the graph6 leading byte encodes the order
    std::vector<std::pair<CanonicalCode, std::int64_t>> items(c.counts.begin(), c.counts.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int oa = a.first[0] - 63, ob = b.first[0] - 63;
        return std::tie(oa, a.first) < std::tie(ob, b.first);
    });
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [code, count] : items) {
        nlohmann::json row;
        row["code"] = code;
        auto it = names.find(code);
        if (it != names.end()) row["name"] = it->second;
        row["order"] = code[0] - 63;
        row["count"] = count;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace graphcoh
