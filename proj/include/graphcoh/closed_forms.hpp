#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "graphcoh/cohomology.hpp"
#include "graphcoh/graph.hpp"

namespace graphcoh {

/// Exact C(n, k); 0 for k < 0 or k > n. n must stay within int64 range
/// (n <= 62 suffices here).
std::int64_t binomial(int n, int k);

std::int64_t b1_formula(const Graph& g);

/// C(|V|,2) + (1/2) sum_i deg(i)^2 - #triangles.
std::int64_t b2_formula(const Graph& g);

/// Weighted induced-subgraph count against the golden third-essential table.
std::int64_t b3_formula(const Graph& g);

struct Beta3Entry {
    CanonicalCode code;
    std::string name;
    std::int64_t beta3;
    int order;  // vertex count of the class
};

/// The 23 classes with nonvanishing third essential cohomology, frozen from
/// the brute-force sweep. Also shipped as data/beta3_table.json.
const std::array<Beta3Entry, 23>& beta3_table();
nlohmann::json beta3_table_json();

/// b_k of the star algebra: C(n+1, ceil(k/2)) * C(n, floor(k/2)).
std::int64_t star_betti(int n, int k);

/// beta_k(S_n): 0 outside n..2n+1; C(n, floor(n/2)) - 1 at k = n; the
/// two-term binomial sum for k > n.
std::int64_t star_essential(int n, int k);

/// Total cohomology mass 2*C(2n+1, n).
std::int64_t star_total(int n);

/// beta_{n,r}(S_n) = C(n,r) - C(n,r-1) for 1 <= r <= floor(n/2), else 0.
std::int64_t star_bigraded(int n, int r);

/// b_n(G, Sigma) = sum_l b_l(G~) * C(s, n-l).
std::int64_t ggi_bn_formula(const BettiTable& b_tilde, int s, int n);

}  // namespace graphcoh
