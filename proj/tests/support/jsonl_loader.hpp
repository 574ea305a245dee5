#pragma once

#include <string>

#include "octekg/lpg.hpp"

namespace octekg::testing {

// Rebuilds a graph from a jsonl export. Node handles are reassigned densely
// in file order; edge endpoints are remapped accordingly.
Graph load_jsonl(const std::string& text);

// Positional isomorphism: same nodes (label, properties) in order and the
// same live edges (endpoints, label, properties) in order.
bool graphs_equivalent(const Graph& a, const Graph& b);

}  // namespace octekg::testing
