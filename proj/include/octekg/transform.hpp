#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "octekg/lpg.hpp"
#include "octekg/ocel.hpp"

namespace octekg {

struct TransformConfig {
  // Reify rel edges between two snapshots of the same object (the
  // qual=update lifecycle chain). Off by default: such pairs carry no
  // cross-object relationship.
  bool reify_update_edges = false;
  // Derive (Class, dfc, Class) edges from the final df edges.
  bool include_class_dfc = false;
};

// Log elements a graph node can stand for.
struct EventKey {
  std::string id;
  friend auto operator<=>(const EventKey&, const EventKey&) = default;
};
struct ObjectKey {
  std::string id;
  friend auto operator<=>(const ObjectKey&, const ObjectKey&) = default;
};
struct ClassKey {
  std::string event_type;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};
struct SnapshotKey {
  std::string object_id;
  Timestamp at;
  friend auto operator<=>(const SnapshotKey&, const SnapshotKey&) = default;
};
struct EntityPairKey {
  std::string first;
  std::string second;
  friend auto operator<=>(const EntityPairKey&, const EntityPairKey&) = default;
};
struct SnapshotPairKey {
  SnapshotKey first;
  SnapshotKey second;
  friend auto operator<=>(const SnapshotPairKey&, const SnapshotPairKey&) = default;
};

using ElementKey =
    std::variant<EventKey, ObjectKey, ClassKey, SnapshotKey, EntityPairKey, SnapshotPairKey>;

// Bidirectional mapping between log elements and the nodes created for them.
class NodeRegistry {
 public:
  void bind(ElementKey key, NodeId node);  // throws GraphError on rebinding
  std::optional<NodeId> find(const ElementKey& key) const;
  NodeId at(const ElementKey& key) const;  // throws LookupError when unbound
  const ElementKey* element_of(NodeId node) const;

  const std::map<ElementKey, NodeId>& entries() const { return to_node_; }

 private:
  std::map<ElementKey, NodeId> to_node_;
  std::map<NodeId, ElementKey> to_element_;
};

// Creates a node labeled `label` with the properties determined by the
// element kind: events carry id/act/time plus their attribute values,
// objects carry id/type, classes carry id=type=the event type, snapshots
// carry the (object, time) id, the type, the time, and every attribute of
// the object's type valued at that time (undefined values are omitted), and
// the two pair kinds carry composite id/type.
NodeId add_node(Graph& graph, const OcelLog& log, const ElementKey& element,
                std::string_view label);

// Creates an edge carrying id = (source id, target id) — composite endpoint
// ids flattened to their canonical string form, omitted when an endpoint has
// no id — plus qual when a qualifier is given.
EdgeId add_edge(Graph& graph, NodeId source, NodeId target, std::string_view label,
                const std::optional<std::string>& qualifier);

// Converts a valid log into a temporal event knowledge graph: the Log node,
// one Class node per observed event type, Event nodes wired to log and
// class, Entity nodes with their time-ordered Snapshot chain, qualified rel
// edges for object-to-object relations (copied onto the snapshots that
// existed at the time), reified entities and snapshots for rel edges,
// qualified corr edges from events to entities, reified entities, latest
// valid snapshots and reified snapshots, and finally directly-follows edges.
// Throws LogInvalidError when validate_log reports violations.
Graph transform(const OcelLog& log, const TransformConfig& config = {});

}  // namespace octekg
