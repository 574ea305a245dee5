#include "octekg/lpg.hpp"

#include <algorithm>
#include <array>

namespace octekg {

namespace {

void append_escaped(std::string& out, const std::string& text) {
  for (char c : text) {
    if (c == '\\' || c == '(' || c == ')' || c == ',') out.push_back('\\');
    out.push_back(c);
  }
}

void append_atom(std::string& out, const AttributeValue& atom) {
  if (atom.type() == ValueType::String) {
    append_escaped(out, atom.as_string());
  } else {
    out += atom.to_string();
  }
}

void append_pair(std::string& out, const PropertyValue::Pair& pair) {
  out.push_back('(');
  append_atom(out, pair.first);
  out.push_back(',');
  append_atom(out, pair.second);
  out.push_back(')');
}

}  // namespace

std::string flatten_atom(const AttributeValue& atom) {
  std::string out;
  append_atom(out, atom);
  return out;
}

std::string flatten(const PropertyValue& value) {
  std::string out;
  if (value.is_atom()) {
    append_atom(out, value.atom());
  } else if (value.is_pair()) {
    append_pair(out, value.pair());
  } else {
    out.push_back('(');
    append_pair(out, value.pair_of_pairs().first);
    out.push_back(',');
    append_pair(out, value.pair_of_pairs().second);
    out.push_back(')');
  }
  return out;
}

NodeId Graph::create_node(std::string label, PropertyMap properties) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_by_label_[label].push_back(id);
  nodes_.push_back({id, std::move(label), std::move(properties)});
  return id;
}

EdgeId Graph::create_edge(NodeId source, NodeId target, std::string label,
                          PropertyMap properties) {
  if (source >= nodes_.size() || target >= nodes_.size()) {
    throw GraphError("create_edge: dangling node handle");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_by_label_[label].push_back(id);
  edges_.push_back({id, source, target, std::move(label), std::move(properties)});
  edge_dead_.push_back(false);
  ++live_edge_count_;
  return id;
}

void Graph::remove_edge(EdgeId edge) {
  if (edge >= edges_.size() || edge_dead_[edge]) {
    throw GraphError("remove_edge: unknown edge handle " + std::to_string(edge));
  }
  auto& index = edges_by_label_[edges_[edge].label];
  index.erase(std::remove(index.begin(), index.end(), edge), index.end());
  edges_[edge].properties.clear();
  edge_dead_[edge] = true;
  --live_edge_count_;
}

const Node& Graph::node(NodeId id) const {
  if (id >= nodes_.size()) throw GraphError("unknown node handle " + std::to_string(id));
  return nodes_[id];
}

const Edge& Graph::edge(EdgeId id) const {
  if (id >= edges_.size() || edge_dead_[id]) {
    throw GraphError("unknown edge handle " + std::to_string(id));
  }
  return edges_[id];
}

bool Graph::edge_alive(EdgeId id) const { return id < edges_.size() && !edge_dead_[id]; }

void Graph::set_node_property(NodeId id, std::string key, PropertyValue value) {
  node(id);
  nodes_[id].properties[std::move(key)] = std::move(value);
}

void Graph::set_edge_property(EdgeId id, std::string key, PropertyValue value) {
  edge(id);
  edges_[id].properties[std::move(key)] = std::move(value);
}

const PropertyValue* Graph::node_property(NodeId id, std::string_view key) const {
  const auto& props = node(id).properties;
  auto it = props.find(key);
  return it == props.end() ? nullptr : &it->second;
}

const PropertyValue* Graph::edge_property(EdgeId id, std::string_view key) const {
  const auto& props = edge(id).properties;
  auto it = props.find(key);
  return it == props.end() ? nullptr : &it->second;
}

const std::vector<NodeId>& Graph::nodes_with_label(std::string_view label) const {
  static const std::vector<NodeId> empty;
  auto it = nodes_by_label_.find(label);
  return it == nodes_by_label_.end() ? empty : it->second;
}

const std::vector<EdgeId>& Graph::edges_with_label(std::string_view label) const {
  static const std::vector<EdgeId> empty;
  auto it = edges_by_label_.find(label);
  return it == edges_by_label_.end() ? empty : it->second;
}

std::vector<std::string> Graph::node_labels() const {
  std::vector<std::string> out;
  for (const auto& [label, ids] : nodes_by_label_) {
    if (!ids.empty()) out.push_back(label);
  }
  return out;
}

std::vector<std::string> Graph::edge_labels() const {
  std::vector<std::string> out;
  for (const auto& [label, ids] : edges_by_label_) {
    if (!ids.empty()) out.push_back(label);
  }
  return out;
}

std::vector<NodeId> Graph::all_nodes() const {
  std::vector<NodeId> out(nodes_.size());
  for (NodeId i = 0; i < nodes_.size(); ++i) out[i] = i;
  return out;
}

std::vector<EdgeId> Graph::live_edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edge_count_);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (!edge_dead_[i]) out.push_back(i);
  }
  return out;
}

std::span<const SchemaTriple> ekg_schema() {
  static const std::vector<SchemaTriple> schema{
      {labels::Log, edges::has, labels::Event},
      {labels::Event, edges::observed, labels::Class},
      {labels::Class, edges::dfc, labels::Class},
      {labels::Event, edges::df, labels::Event},
      {labels::Event, edges::corr, labels::Entity},
      {labels::Entity, edges::rel, labels::Entity},
      {labels::Entity, edges::derived, labels::Entity},
  };
  return schema;
}

std::span<const SchemaTriple> tekg_schema() {
  static const std::vector<SchemaTriple> schema = [] {
    auto base = ekg_schema();
    std::vector<SchemaTriple> s(base.begin(), base.end());
    s.push_back({labels::Event, edges::corr, labels::Snapshot});
    s.push_back({labels::Snapshot, edges::rel, labels::Snapshot});
    s.push_back({labels::Entity, edges::snapshot, labels::Snapshot});
    s.push_back({labels::Snapshot, edges::derived, labels::Snapshot});
    return s;
  }();
  return schema;
}

std::vector<SchemaViolation> conforms_to(const Graph& graph,
                                         std::span<const SchemaTriple> schema) {
  std::vector<SchemaViolation> out;
  for (EdgeId id : graph.live_edges()) {
    const Edge& e = graph.edge(id);
    SchemaTriple found{graph.node(e.source).label, e.label, graph.node(e.target).label};
    bool admissible = std::any_of(schema.begin(), schema.end(),
                                  [&found](const SchemaTriple& t) { return t == found; });
    if (!admissible) out.push_back({id, std::move(found)});
  }
  return out;
}

namespace {

bool is_atomic_string(const PropertyValue* v) {
  return v != nullptr && v->is_atom() && v->atom().type() == ValueType::String;
}

bool is_atomic_time(const PropertyValue* v) {
  return v != nullptr && v->is_atom() && v->atom().type() == ValueType::Time;
}

bool is_string_pair(const PropertyValue* v) {
  return v != nullptr && v->is_pair() && v->pair().first.type() == ValueType::String &&
         v->pair().second.type() == ValueType::String;
}

// (object-id, timestamp)
bool is_snapshot_pair(const PropertyValue* v) {
  return v != nullptr && v->is_pair() && v->pair().first.type() == ValueType::String &&
         v->pair().second.type() == ValueType::Time;
}

bool is_snapshot_pair_of_pairs(const PropertyValue* v) {
  if (v == nullptr || !v->is_pair_of_pairs()) return false;
  const auto& [a, b] = v->pair_of_pairs();
  return a.first.type() == ValueType::String && a.second.type() == ValueType::Time &&
         b.first.type() == ValueType::String && b.second.type() == ValueType::Time;
}

}  // namespace

std::vector<std::string> validate_node_contracts(const Graph& graph) {
  std::vector<std::string> out;
  auto complain = [&out](NodeId id, const std::string& what) {
    out.push_back("node " + std::to_string(id) + ": " + what);
  };

  for (NodeId id : graph.nodes_with_label(labels::Event)) {
    if (!is_atomic_string(graph.node_property(id, props::id))) {
      complain(id, "Event node requires an atomic id");
    }
    if (!is_atomic_string(graph.node_property(id, props::act))) {
      complain(id, "Event node requires an act property");
    }
    if (!is_atomic_time(graph.node_property(id, props::time))) {
      complain(id, "Event node requires a timestamp time property");
    }
  }

  for (NodeId id : graph.nodes_with_label(labels::Entity)) {
    const PropertyValue* node_id = graph.node_property(id, props::id);
    const PropertyValue* type = graph.node_property(id, props::type);
    if (is_atomic_string(node_id)) {
      if (!is_atomic_string(type)) complain(id, "Entity node requires an object type");
    } else if (is_string_pair(node_id)) {
      // reified entity: the type mirrors the id shape
      if (!is_string_pair(type)) complain(id, "reified Entity node requires a pair type");
    } else {
      complain(id, "Entity node requires an object id or a pair of object ids");
    }
  }

  for (NodeId id : graph.nodes_with_label(labels::Snapshot)) {
    const PropertyValue* node_id = graph.node_property(id, props::id);
    const PropertyValue* type = graph.node_property(id, props::type);
    if (is_snapshot_pair(node_id)) {
      if (!is_atomic_string(type)) complain(id, "Snapshot node requires an object type");
      if (!is_atomic_time(graph.node_property(id, props::time))) {
        complain(id, "Snapshot node requires a timestamp time property");
      }
    } else if (is_snapshot_pair_of_pairs(node_id)) {
      if (!is_string_pair(type)) complain(id, "reified Snapshot node requires a pair type");
    } else {
      complain(id, "Snapshot node requires an (object, time) id or a pair of such pairs");
    }
  }

  return out;
}

}  // namespace octekg
