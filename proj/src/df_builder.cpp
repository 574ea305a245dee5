#include "octekg/df_builder.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace octekg {

namespace {

struct EventOrder {
  Timestamp time;
  std::string id;
  NodeId node;

  friend bool operator<(const EventOrder& a, const EventOrder& b) {
    return std::tie(a.time, a.id) < std::tie(b.time, b.id);
  }
};

}  // namespace

void add_raw_dfs(Graph& graph) {
  // events correlated to each owner node, owners in handle order
  std::map<NodeId, std::vector<NodeId>> events_of;
  for (EdgeId id : graph.edges_with_label(edges::corr)) {
    const Edge& e = graph.edge(id);
    events_of[e.target].push_back(e.source);
  }

  // existing df edges, for idempotent re-runs
  std::set<std::tuple<NodeId, NodeId, std::string>> existing;
  for (EdgeId id : graph.edges_with_label(edges::df)) {
    const Edge& e = graph.edge(id);
    const PropertyValue* ent = graph.edge_property(id, props::ent);
    existing.emplace(e.source, e.target, ent ? flatten(*ent) : std::string());
  }

  for (auto& [owner, events] : events_of) {
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    if (events.size() < 2) continue;

    std::vector<EventOrder> ordered;
    ordered.reserve(events.size());
    for (NodeId event : events) {
      const PropertyValue* time = graph.node_property(event, props::time);
      const PropertyValue* id = graph.node_property(event, props::id);
      if (time == nullptr || id == nullptr) {
        throw GraphError("corr source node " + std::to_string(event) + " lacks id/time");
      }
      ordered.push_back({time->atom().as_time(), id->atom().as_string(), event});
    }
    std::sort(ordered.begin(), ordered.end());

    const PropertyValue* owner_id = graph.node_property(owner, props::id);
    const PropertyValue* owner_type = graph.node_property(owner, props::type);
    if (owner_id == nullptr || owner_type == nullptr) {
      throw GraphError("corr target node " + std::to_string(owner) + " lacks id/type");
    }
    const std::string ent_key = flatten(*owner_id);

    for (std::size_t i = 1; i < ordered.size(); ++i) {
      const NodeId source = ordered[i - 1].node;
      const NodeId target = ordered[i].node;
      if (!existing.emplace(source, target, ent_key).second) continue;
      PropertyMap properties;
      properties[props::id] = PropertyValue(
          AttributeValue::string(flatten_atom(graph.node_property(source, props::id)->atom())),
          AttributeValue::string(flatten_atom(graph.node_property(target, props::id)->atom())));
      properties[props::ent] = *owner_id;
      properties[props::type] = *owner_type;
      graph.create_edge(source, target, edges::df, std::move(properties));
    }
  }
}

InformativeSet identify_informative(const Graph& graph) {
  // owner nodes by flattened id (Entity and Snapshot id shapes are disjoint)
  std::map<std::string, NodeId> owner_by_id;
  for (const char* label : {labels::Entity, labels::Snapshot}) {
    for (NodeId node : graph.nodes_with_label(label)) {
      if (const PropertyValue* id = graph.node_property(node, props::id)) {
        owner_by_id.emplace(flatten(*id), node);
      }
    }
  }

  std::map<NodeId, std::vector<NodeId>> constituents_of;
  for (EdgeId id : graph.edges_with_label(edges::derived)) {
    const Edge& e = graph.edge(id);
    constituents_of[e.source].push_back(e.target);
  }

  // parallel df edges per endpoint pair, with their flattened ent
  std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<EdgeId, std::string>>> parallel;
  const auto& df_edges = graph.edges_with_label(edges::df);
  for (EdgeId id : df_edges) {
    const Edge& e = graph.edge(id);
    const PropertyValue* ent = graph.edge_property(id, props::ent);
    parallel[{e.source, e.target}].emplace_back(id, ent ? flatten(*ent) : std::string());
  }

  InformativeSet informative;
  for (EdgeId id : df_edges) {
    const Edge& e = graph.edge(id);
    const PropertyValue* ent = graph.edge_property(id, props::ent);
    const std::string ent_key = ent ? flatten(*ent) : std::string();

    bool duplicates_constituent = false;
    auto owner = owner_by_id.find(ent_key);
    if (owner != owner_by_id.end()) {
      auto constituents = constituents_of.find(owner->second);
      if (constituents != constituents_of.end()) {
        const auto& candidates = parallel[{e.source, e.target}];
        for (NodeId constituent : constituents->second) {
          const PropertyValue* cid = graph.node_property(constituent, props::id);
          if (cid == nullptr) continue;
          const std::string constituent_key = flatten(*cid);
          for (const auto& [other, other_ent] : candidates) {
            if (other != id && other_ent == constituent_key) {
              duplicates_constituent = true;
              break;
            }
          }
          if (duplicates_constituent) break;
        }
      }
    }
    if (!duplicates_constituent) informative.insert(id);
  }
  return informative;
}

void prune_redundant(Graph& graph, const InformativeSet& informative) {
  std::map<std::pair<NodeId, NodeId>, std::set<EdgeId>> live_parallel;
  // informative same-ent edges entering / leaving a node (never removed)
  std::set<std::pair<NodeId, std::string>> informative_into, informative_out_of;

  const std::vector<EdgeId> df_edges = graph.edges_with_label(edges::df);
  for (EdgeId id : df_edges) {
    const Edge& e = graph.edge(id);
    live_parallel[{e.source, e.target}].insert(id);
    if (informative.count(id)) {
      const PropertyValue* ent = graph.edge_property(id, props::ent);
      const std::string ent_key = ent ? flatten(*ent) : std::string();
      informative_into.emplace(e.target, ent_key);
      informative_out_of.emplace(e.source, ent_key);
    }
  }

  for (EdgeId id : df_edges) {
    if (informative.count(id)) continue;
    const Edge& e = graph.edge(id);
    const auto endpoints = std::make_pair(e.source, e.target);
    if (live_parallel[endpoints].size() < 2) continue;

    const PropertyValue* ent = graph.edge_property(id, props::ent);
    const std::string ent_key = ent ? flatten(*ent) : std::string();
    const bool guarded = informative_into.count({e.source, ent_key}) &&
                         informative_out_of.count({e.target, ent_key});
    if (guarded) continue;

    live_parallel[endpoints].erase(id);
    graph.remove_edge(id);
  }
}

void add_dfs(Graph& graph) {
  add_raw_dfs(graph);
  const InformativeSet informative = identify_informative(graph);
  prune_redundant(graph, informative);
}

}  // namespace octekg
