#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "octekg/error.hpp"
#include "octekg/value.hpp"

namespace octekg {

namespace labels {
inline constexpr const char* Log = "Log";
inline constexpr const char* Class = "Class";
inline constexpr const char* Event = "Event";
inline constexpr const char* Entity = "Entity";
inline constexpr const char* Snapshot = "Snapshot";
}  // namespace labels

namespace edges {
inline constexpr const char* has = "has";
inline constexpr const char* observed = "observed";
inline constexpr const char* corr = "corr";
inline constexpr const char* rel = "rel";
inline constexpr const char* derived = "derived";
inline constexpr const char* snapshot = "snapshot";
inline constexpr const char* df = "df";
inline constexpr const char* dfc = "dfc";
}  // namespace edges

namespace props {
inline constexpr const char* id = "id";
inline constexpr const char* act = "act";
inline constexpr const char* time = "time";
inline constexpr const char* type = "type";
inline constexpr const char* qual = "qual";
inline constexpr const char* ent = "ent";
}  // namespace props

// Property values are atomic, a pair of atoms, or a pair of pairs of atoms.
// Deeper nesting is unrepresentable.
class PropertyValue {
 public:
  using Atom = AttributeValue;
  using Pair = std::pair<Atom, Atom>;
  using PairOfPairs = std::pair<Pair, Pair>;

  PropertyValue() = default;
  PropertyValue(Atom atom) : v_(std::move(atom)) {}  // NOLINT: implicit by design
  PropertyValue(Atom first, Atom second) : v_(Pair(std::move(first), std::move(second))) {}
  PropertyValue(Pair first, Pair second) : v_(PairOfPairs(std::move(first), std::move(second))) {}

  bool is_atom() const { return v_.index() == 0; }
  bool is_pair() const { return v_.index() == 1; }
  bool is_pair_of_pairs() const { return v_.index() == 2; }

  const Atom& atom() const { return std::get<Atom>(v_); }
  const Pair& pair() const { return std::get<Pair>(v_); }
  const PairOfPairs& pair_of_pairs() const { return std::get<PairOfPairs>(v_); }

  friend bool operator==(const PropertyValue& a, const PropertyValue& b) { return a.v_ == b.v_; }
  friend bool operator<(const PropertyValue& a, const PropertyValue& b) { return a.v_ < b.v_; }

 private:
  std::variant<Atom, Pair, PairOfPairs> v_;
};

// Canonical text form: atoms in natural notation, composites parenthesized
// as "(a,b)" / "((a,t1),(b,t2))" with '\', '(', ')' and ',' escaped inside
// atoms. Injective on identifier-shaped values.
std::string flatten(const PropertyValue& value);
std::string flatten_atom(const AttributeValue& atom);

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

using PropertyMap = std::map<std::string, PropertyValue, std::less<>>;

struct Node {
  NodeId handle;
  std::string label;
  PropertyMap properties;
};

struct Edge {
  EdgeId handle;
  NodeId source;
  NodeId target;
  std::string label;
  PropertyMap properties;
};

// Labeled property graph: nodes and edges carry exactly one label and a
// property map. Handles are dense integers in creation order and stay
// stable across edge removal; iteration is always creation-ordered.
class Graph {
 public:
  NodeId create_node(std::string label, PropertyMap properties = {});
  EdgeId create_edge(NodeId source, NodeId target, std::string label, PropertyMap properties = {});

  // Purges the edge from the edge set, the label index, and property storage.
  void remove_edge(EdgeId edge);

  const Node& node(NodeId id) const;
  const Edge& edge(EdgeId id) const;  // throws GraphError for removed edges
  bool edge_alive(EdgeId id) const;

  void set_node_property(NodeId id, std::string key, PropertyValue value);
  void set_edge_property(EdgeId id, std::string key, PropertyValue value);
  const PropertyValue* node_property(NodeId id, std::string_view key) const;
  const PropertyValue* edge_property(EdgeId id, std::string_view key) const;

  const std::vector<NodeId>& nodes_with_label(std::string_view label) const;
  const std::vector<EdgeId>& edges_with_label(std::string_view label) const;

  std::vector<std::string> node_labels() const;
  std::vector<std::string> edge_labels() const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return live_edge_count_; }

  std::vector<NodeId> all_nodes() const;
  std::vector<EdgeId> live_edges() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<bool> edge_dead_;
  std::size_t live_edge_count_ = 0;
  std::map<std::string, std::vector<NodeId>, std::less<>> nodes_by_label_;
  std::map<std::string, std::vector<EdgeId>, std::less<>> edges_by_label_;
};

// One admissible (source-label, edge-label, target-label) combination.
struct SchemaTriple {
  std::string source_label;
  std::string edge_label;
  std::string target_label;

  friend auto operator<=>(const SchemaTriple&, const SchemaTriple&) = default;
};

// Event-knowledge-graph schema and its temporal extension.
std::span<const SchemaTriple> ekg_schema();
std::span<const SchemaTriple> tekg_schema();

struct SchemaViolation {
  EdgeId edge;
  SchemaTriple found;  // the edge's actual (source, label, target) labels
};

// Empty iff every edge matches some schema triple.
std::vector<SchemaViolation> conforms_to(const Graph& graph, std::span<const SchemaTriple> schema);

// Node property contracts: Event nodes carry id/act/time, Entity nodes carry
// an object id (or pair, when reified) and a matching type, Snapshot nodes
// carry an (object, time) id (or pair of such pairs) and a matching type.
std::vector<std::string> validate_node_contracts(const Graph& graph);

}  // namespace octekg
