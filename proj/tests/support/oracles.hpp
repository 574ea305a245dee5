#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include "octekg/lpg.hpp"
#include "octekg/ocel.hpp"

namespace octekg::testing {

// Independent linear scan over the full set of object attribute entries.
std::optional<AttributeValue> resolve_oracle(const OcelLog& log, std::string_view object_id,
                                             std::string_view attribute, Timestamp t);

// One df edge as (source event node, target event node, flattened owner id).
using DfKey = std::tuple<NodeId, NodeId, std::string>;

// Expected pre-pruning df edges: per corr-target owner, the distinct
// correlated events sorted by (time, id) and paired consecutively.
std::set<DfKey> df_raw_oracle(const Graph& graph);

// Expected df edges after the informative/pruning rules, computed directly
// from the corr and derived structure (order-independent formulation).
std::set<DfKey> df_final_oracle(const Graph& graph);

// The informative subset of df_raw_oracle(graph).
std::set<DfKey> df_informative_oracle(const Graph& graph);

// Live df edges of the graph in the same key form.
std::set<DfKey> actual_df_edges(const Graph& graph);

}  // namespace octekg::testing
