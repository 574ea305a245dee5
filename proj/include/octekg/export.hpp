#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "octekg/lpg.hpp"

namespace octekg {

enum class ExportFormat { Cypher, GraphML, Jsonl };

std::optional<ExportFormat> export_format_from_name(std::string_view name);
std::string_view export_format_name(ExportFormat format);

// Serializes the graph. Deterministic: identical graphs produce
// byte-identical output.
//
//  - cypher:  one CREATE statement per node and one MATCH..CREATE statement
//             per edge; nodes carry a `_h` handle property for endpoint
//             matching; composite values are flattened to "(a,b)" strings.
//  - graphml: XML with the label as an element attribute and properties as
//             string-typed data keys.
//  - jsonl:   one JSON object per node, then per edge, with a `kind` field
//             and fully typed property values (lossless reload).
//
// df edges additionally export their ent/type under EntityID/EntityType in
// the cypher and graphml forms.
std::string export_graph(const Graph& graph, ExportFormat format);

struct GraphStats {
  std::map<std::string, std::size_t> nodes_by_label;
  std::map<std::string, std::size_t> edges_by_label;
  std::size_t df_entity_owned = 0;    // df edges whose ent is an object id (or pair)
  std::size_t df_snapshot_owned = 0;  // df edges whose ent is a snapshot id (or pair)
  std::map<std::string, std::size_t> snapshots_by_object_type;  // simple snapshots only
  std::size_t node_total = 0;
  std::size_t edge_total = 0;
};

GraphStats compute_stats(const Graph& graph);
std::string stats_to_json(const GraphStats& stats);

}  // namespace octekg
