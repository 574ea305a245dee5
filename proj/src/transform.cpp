#include "octekg/transform.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "octekg/df_builder.hpp"

namespace octekg {

void NodeRegistry::bind(ElementKey key, NodeId node) {
  auto [it, inserted] = to_node_.emplace(std::move(key), node);
  if (!inserted) throw GraphError("element is already bound to node " + std::to_string(it->second));
  to_element_.emplace(node, it->first);
}

std::optional<NodeId> NodeRegistry::find(const ElementKey& key) const {
  auto it = to_node_.find(key);
  if (it == to_node_.end()) return std::nullopt;
  return it->second;
}

NodeId NodeRegistry::at(const ElementKey& key) const {
  auto it = to_node_.find(key);
  if (it == to_node_.end()) throw LookupError("no node bound for element");
  return it->second;
}

const ElementKey* NodeRegistry::element_of(NodeId node) const {
  auto it = to_element_.find(node);
  return it == to_element_.end() ? nullptr : &it->second;
}

NodeId add_node(Graph& graph, const OcelLog& log, const ElementKey& element,
                std::string_view label) {
  PropertyMap properties;

  if (const auto* ev = std::get_if<EventKey>(&element)) {
    const EventRecord& record = log.event(ev->id);
    properties[props::id] = AttributeValue::string(record.id);
    properties[props::act] = AttributeValue::string(record.type);
    properties[props::time] = AttributeValue::time(record.time);
    for (const auto* entry : log.event_attributes(record.id)) {
      properties[entry->attribute] = entry->value;
    }
  } else if (const auto* ob = std::get_if<ObjectKey>(&element)) {
    const ObjectRecord& record = log.object(ob->id);
    properties[props::id] = AttributeValue::string(record.id);
    properties[props::type] = AttributeValue::string(record.type);
  } else if (const auto* cls = std::get_if<ClassKey>(&element)) {
    properties[props::id] = AttributeValue::string(cls->event_type);
    properties[props::type] = AttributeValue::string(cls->event_type);
  } else if (const auto* snap = std::get_if<SnapshotKey>(&element)) {
    const ObjectRecord& record = log.object(snap->object_id);
    properties[props::id] =
        PropertyValue(AttributeValue::string(record.id), AttributeValue::time(snap->at));
    properties[props::type] = AttributeValue::string(record.type);
    properties[props::time] = AttributeValue::time(snap->at);
    for (const auto& [attribute, owner_type] : log.object_attribute_types()) {
      if (owner_type != record.type) continue;
      if (auto value = resolve_attribute_at(log, record.id, attribute, snap->at)) {
        properties[attribute] = *value;
      }
    }
  } else if (const auto* pair = std::get_if<EntityPairKey>(&element)) {
    const ObjectRecord& first = log.object(pair->first);
    const ObjectRecord& second = log.object(pair->second);
    properties[props::id] =
        PropertyValue(AttributeValue::string(first.id), AttributeValue::string(second.id));
    properties[props::type] =
        PropertyValue(AttributeValue::string(first.type), AttributeValue::string(second.type));
  } else if (const auto* spair = std::get_if<SnapshotPairKey>(&element)) {
    const ObjectRecord& first = log.object(spair->first.object_id);
    const ObjectRecord& second = log.object(spair->second.object_id);
    properties[props::id] = PropertyValue(
        {AttributeValue::string(first.id), AttributeValue::time(spair->first.at)},
        {AttributeValue::string(second.id), AttributeValue::time(spair->second.at)});
    properties[props::type] =
        PropertyValue(AttributeValue::string(first.type), AttributeValue::string(second.type));
  }

  return graph.create_node(std::string(label), std::move(properties));
}

EdgeId add_edge(Graph& graph, NodeId source, NodeId target, std::string_view label,
                const std::optional<std::string>& qualifier) {
  PropertyMap properties;
  const PropertyValue* source_id = graph.node_property(source, props::id);
  const PropertyValue* target_id = graph.node_property(target, props::id);
  if (source_id != nullptr && target_id != nullptr) {
    properties[props::id] = PropertyValue(AttributeValue::string(flatten(*source_id)),
                                          AttributeValue::string(flatten(*target_id)));
  }
  if (qualifier.has_value()) {
    properties[props::qual] = AttributeValue::string(*qualifier);
  }
  return graph.create_edge(source, target, std::string(label), std::move(properties));
}

namespace {

struct SnapshotRef {
  Timestamp at;
  NodeId node;
};

// Latest snapshot with time <= t, or nullopt.
std::optional<NodeId> latest_snapshot_at(const std::vector<SnapshotRef>& snapshots, Timestamp t) {
  auto it = std::upper_bound(snapshots.begin(), snapshots.end(), t,
                             [](Timestamp value, const SnapshotRef& s) { return value < s.at; });
  if (it == snapshots.begin()) return std::nullopt;
  return std::prev(it)->node;
}

void add_class_dfc(Graph& graph, const NodeRegistry& registry) {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (EdgeId id : std::vector<EdgeId>(graph.edges_with_label(edges::df))) {
    const Edge& e = graph.edge(id);
    const PropertyValue* source_act = graph.node_property(e.source, props::act);
    const PropertyValue* target_act = graph.node_property(e.target, props::act);
    const NodeId c1 = registry.at(ClassKey{source_act->atom().as_string()});
    const NodeId c2 = registry.at(ClassKey{target_act->atom().as_string()});
    if (seen.emplace(c1, c2).second) {
      add_edge(graph, c1, c2, edges::dfc, std::nullopt);
    }
  }
}

}  // namespace

Graph transform(const OcelLog& log, const TransformConfig& config) {
  if (auto violations = validate_log(log); !violations.empty()) {
    throw LogInvalidError(std::move(violations));
  }

  Graph graph;
  NodeRegistry registry;

  // the log node
  const NodeId log_node = graph.create_node(labels::Log);

  // a Class node per observed event type
  for (const auto& event_type : observed_event_types(log)) {
    registry.bind(ClassKey{event_type}, add_node(graph, log, ClassKey{event_type}, labels::Class));
  }

  // an Event node per event, connected to the log node and to its class
  for (const auto& event : log.events()) {
    const NodeId n = add_node(graph, log, EventKey{event.id}, labels::Event);
    registry.bind(EventKey{event.id}, n);
    add_edge(graph, log_node, n, edges::has, std::nullopt);
    add_edge(graph, n, registry.at(ClassKey{event.type}), edges::observed, std::nullopt);
  }

  // an Entity node per object with its snapshot chain in temporal order
  std::map<std::string, std::vector<SnapshotRef>, std::less<>> snapshots_of;
  for (const auto& object : log.objects()) {
    const NodeId entity = add_node(graph, log, ObjectKey{object.id}, labels::Entity);
    registry.bind(ObjectKey{object.id}, entity);

    auto& snapshots = snapshots_of[object.id];
    for (Timestamp t : change_times(log, object.id)) {
      const NodeId snapshot = add_node(graph, log, SnapshotKey{object.id, t}, labels::Snapshot);
      registry.bind(SnapshotKey{object.id, t}, snapshot);
      add_edge(graph, entity, snapshot, edges::snapshot, std::nullopt);
      if (!snapshots.empty()) {
        add_edge(graph, snapshots.back().node, snapshot, edges::rel, "update");
      }
      snapshots.push_back({t, snapshot});
    }
  }

  // object-to-object relations, copied onto the snapshots that existed at
  // the time of each source snapshot
  for (const auto& rel : log.o2o()) {
    add_edge(graph, registry.at(ObjectKey{rel.source_id}), registry.at(ObjectKey{rel.target_id}),
             edges::rel, rel.qualifier);
    const auto& target_snapshots = snapshots_of[rel.target_id];
    for (const SnapshotRef& source_snapshot : snapshots_of[rel.source_id]) {
      if (auto target = latest_snapshot_at(target_snapshots, source_snapshot.at)) {
        add_edge(graph, source_snapshot.node, *target, edges::rel, rel.qualifier);
      }
    }
  }

  // reified entities and snapshots, one per distinct endpoint pair
  for (EdgeId id : std::vector<EdgeId>(graph.edges_with_label(edges::rel))) {
    // copy the endpoints: adding edges below relocates edge storage
    const NodeId rel_source = graph.edge(id).source;
    const NodeId rel_target = graph.edge(id).target;
    const ElementKey* source = registry.element_of(rel_source);
    const ElementKey* target = registry.element_of(rel_target);

    ElementKey pair_key;
    if (const auto* o1 = std::get_if<ObjectKey>(source)) {
      pair_key = EntityPairKey{o1->id, std::get<ObjectKey>(*target).id};
    } else {
      const auto& s1 = std::get<SnapshotKey>(*source);
      const auto& s2 = std::get<SnapshotKey>(*target);
      if (!config.reify_update_edges && s1.object_id == s2.object_id) continue;
      pair_key = SnapshotPairKey{s1, s2};
    }
    if (registry.find(pair_key)) continue;

    const NodeId reified = add_node(graph, log, pair_key, graph.node(rel_source).label);
    registry.bind(pair_key, reified);
    add_edge(graph, reified, rel_source, edges::derived, std::nullopt);
    add_edge(graph, reified, rel_target, edges::derived, std::nullopt);
  }

  // reified nodes by constituent, in creation order
  std::map<NodeId, std::vector<NodeId>> derived_into;
  for (EdgeId id : graph.edges_with_label(edges::derived)) {
    const Edge& e = graph.edge(id);
    derived_into[e.target].push_back(e.source);
  }

  // event-to-object relations: corr edges to the entity, its reified
  // entities, the last snapshot valid at the event time, and that
  // snapshot's reified snapshots
  for (const auto& rel : log.e2o()) {
    const NodeId event = registry.at(EventKey{rel.event_id});
    const NodeId entity = registry.at(ObjectKey{rel.object_id});
    add_edge(graph, event, entity, edges::corr, rel.qualifier);
    for (NodeId reified : derived_into[entity]) {
      add_edge(graph, event, reified, edges::corr, rel.qualifier);
    }

    const Timestamp event_time = log.event(rel.event_id).time;
    if (auto snapshot = latest_snapshot_at(snapshots_of[rel.object_id], event_time)) {
      add_edge(graph, event, *snapshot, edges::corr, rel.qualifier);
      for (NodeId reified : derived_into[*snapshot]) {
        add_edge(graph, event, reified, edges::corr, rel.qualifier);
      }
    }
  }

  add_dfs(graph);

  if (config.include_class_dfc) add_class_dfc(graph, registry);

  return graph;
}

}  // namespace octekg
