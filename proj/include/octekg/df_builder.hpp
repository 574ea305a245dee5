#pragma once

#include <set>

#include "octekg/lpg.hpp"

namespace octekg {

using InformativeSet = std::set<EdgeId>;

// Adds directly-follows edges: for every node targeted by corr edges, the
// distinct correlated events are ordered by (time, id) and consecutive
// pairs are connected by a df edge carrying ent = the owner's id and
// type = the owner's type. Skips pairs for which an identical
// (source, target, ent) df edge already exists.
void add_raw_dfs(Graph& graph);

// A df edge is informative unless its owner is a reified node (it has
// outgoing derived edges) and some constituent owns a parallel df edge with
// the same endpoints.
InformativeSet identify_informative(const Graph& graph);

// Removes uninformative df edges that run parallel to a surviving edge,
// unless an informative same-ent df edge enters the source and another
// leaves the target. Single pass in handle order; informative edges are
// never removed.
void prune_redundant(Graph& graph, const InformativeSet& informative);

// The three phases in order. Re-running on an already processed graph
// leaves its live edges unchanged.
void add_dfs(Graph& graph);

}  // namespace octekg
