#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "graphcoh/graph.hpp"

namespace graphcoh {

/// Induced-subgraph occurrence counts bucketed by canonical code, for
/// subset sizes 1..max_order.
struct Census {
    std::map<CanonicalCode, std::int64_t> counts;
    int max_order = 0;
};

Census census(const Graph& g, int max_order, int canonical_limit = kCanonicalMaxOrder);

/// Number of vertex subsets S with G[S] isomorphic to h.
std::int64_t count_induced(const Graph& g, const Graph& h,
                           int canonical_limit = kCanonicalMaxOrder);

/// Display names for well-known small classes (K_n, P_n, C_n, S_n, nK1,
/// their unions, and the named order-4/5 graphs).
const std::map<CanonicalCode, std::string>& graph_name_registry();

/// [{code, name?, order, count}, ...] sorted by (order, code).
nlohmann::json census_report(const Census& c);

}  // namespace graphcoh
