#include "octekg/export.hpp"

#include <charconv>
#include <set>

#include <json.hpp>

namespace octekg {

using nlohmann::ordered_json;

std::optional<ExportFormat> export_format_from_name(std::string_view name) {
  if (name == "cypher") return ExportFormat::Cypher;
  if (name == "graphml") return ExportFormat::GraphML;
  if (name == "jsonl") return ExportFormat::Jsonl;
  return std::nullopt;
}

std::string_view export_format_name(ExportFormat format) {
  switch (format) {
    case ExportFormat::Cypher: return "cypher";
    case ExportFormat::GraphML: return "graphml";
    case ExportFormat::Jsonl: return "jsonl";
  }
  return "jsonl";
}

namespace {

// ---------------------------------------------------------------- cypher --

std::string cypher_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string cypher_key(const std::string& name) {
  std::string out = "`";
  for (char c : name) {
    if (c == '`') out += "``";
    out.push_back(c);
  }
  out.push_back('`');
  return out;
}

std::string cypher_value(const PropertyValue& value) {
  if (value.is_atom()) {
    const auto& atom = value.atom();
    switch (atom.type()) {
      case ValueType::String: return cypher_quote(atom.as_string());
      case ValueType::Integer: return std::to_string(atom.as_integer());
      case ValueType::Real: {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), atom.as_real());
        return std::string(buf, end);
      }
      case ValueType::Boolean: return atom.as_boolean() ? "true" : "false";
      case ValueType::Time: return cypher_quote(atom.as_time().to_iso8601());
    }
  }
  return cypher_quote(flatten(value));
}

// df ent/type also export under the names used by existing EKG tooling
void add_df_aliases(std::map<std::string, std::string>& rendered, const Edge& edge,
                    bool quoted_strings) {
  if (edge.label != edges::df) return;
  auto alias = [&](const char* key, const char* alias_key) {
    auto it = edge.properties.find(key);
    if (it == edge.properties.end()) return;
    const std::string flat = flatten(it->second);
    rendered[alias_key] = quoted_strings ? cypher_quote(flat) : flat;
  };
  alias(props::ent, "EntityID");
  alias(props::type, "EntityType");
}

std::string render_cypher_props(const std::map<std::string, std::string>& rendered) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : rendered) {
    if (!first) out += ", ";
    first = false;
    out += cypher_key(key) + ": " + value;
  }
  out.push_back('}');
  return out;
}

std::string export_cypher(const Graph& graph) {
  std::string out;
  for (NodeId id : graph.all_nodes()) {
    const Node& node = graph.node(id);
    std::map<std::string, std::string> rendered;
    for (const auto& [key, value] : node.properties) rendered[key] = cypher_value(value);
    rendered["_h"] = std::to_string(id);  // the handle wins over a like-named property
    out += "CREATE (:" + cypher_key(node.label) + " " + render_cypher_props(rendered) + ");\n";
  }
  for (EdgeId id : graph.live_edges()) {
    const Edge& edge = graph.edge(id);
    std::map<std::string, std::string> rendered;
    for (const auto& [key, value] : edge.properties) rendered[key] = cypher_value(value);
    add_df_aliases(rendered, edge, /*quoted_strings=*/true);
    out += "MATCH (a {`_h`: " + std::to_string(edge.source) + "}), (b {`_h`: " +
           std::to_string(edge.target) + "}) CREATE (a)-[:" + cypher_key(edge.label);
    if (!rendered.empty()) out += " " + render_cypher_props(rendered);
    out += "]->(b);\n";
  }
  return out;
}

// --------------------------------------------------------------- graphml --

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string export_graphml(const Graph& graph) {
  std::set<std::string> node_keys, edge_keys;
  for (NodeId id : graph.all_nodes()) {
    for (const auto& [key, value] : graph.node(id).properties) node_keys.insert(key);
  }
  for (EdgeId id : graph.live_edges()) {
    const Edge& edge = graph.edge(id);
    for (const auto& [key, value] : edge.properties) edge_keys.insert(key);
    if (edge.label == edges::df) {
      if (edge.properties.count(props::ent)) edge_keys.insert("EntityID");
      if (edge.properties.count(props::type)) edge_keys.insert("EntityType");
    }
  }

  std::map<std::string, std::string> node_key_id, edge_key_id;
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  std::size_t counter = 0;
  for (const auto& key : node_keys) {
    node_key_id[key] = "nk" + std::to_string(counter++);
    out += "  <key id=\"" + node_key_id[key] + "\" for=\"node\" attr.name=\"" + xml_escape(key) +
           "\" attr.type=\"string\"/>\n";
  }
  counter = 0;
  for (const auto& key : edge_keys) {
    edge_key_id[key] = "ek" + std::to_string(counter++);
    out += "  <key id=\"" + edge_key_id[key] + "\" for=\"edge\" attr.name=\"" + xml_escape(key) +
           "\" attr.type=\"string\"/>\n";
  }

  out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
  for (NodeId id : graph.all_nodes()) {
    const Node& node = graph.node(id);
    out += "    <node id=\"n" + std::to_string(id) + "\" label=\"" + xml_escape(node.label) + "\"";
    if (node.properties.empty()) {
      out += "/>\n";
      continue;
    }
    out += ">\n";
    for (const auto& [key, value] : node.properties) {
      out += "      <data key=\"" + node_key_id[key] + "\">" + xml_escape(flatten(value)) +
             "</data>\n";
    }
    out += "    </node>\n";
  }
  for (EdgeId id : graph.live_edges()) {
    const Edge& edge = graph.edge(id);
    std::map<std::string, std::string> data;
    for (const auto& [key, value] : edge.properties) data[key] = flatten(value);
    add_df_aliases(data, edge, /*quoted_strings=*/false);
    out += "    <edge id=\"e" + std::to_string(id) + "\" source=\"n" +
           std::to_string(edge.source) + "\" target=\"n" + std::to_string(edge.target) +
           "\" label=\"" + xml_escape(edge.label) + "\"";
    if (data.empty()) {
      out += "/>\n";
      continue;
    }
    out += ">\n";
    for (const auto& [key, value] : data) {
      out += "      <data key=\"" + edge_key_id[key] + "\">" + xml_escape(value) + "</data>\n";
    }
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

// ----------------------------------------------------------------- jsonl --

ordered_json atom_to_json(const AttributeValue& atom) {
  ordered_json out;
  out["type"] = value_type_name(atom.type());
  switch (atom.type()) {
    case ValueType::String: out["value"] = atom.as_string(); break;
    case ValueType::Integer: out["value"] = atom.as_integer(); break;
    case ValueType::Real: out["value"] = atom.as_real(); break;
    case ValueType::Boolean: out["value"] = atom.as_boolean(); break;
    case ValueType::Time: out["value"] = atom.as_time().to_iso8601(); break;
  }
  return out;
}

ordered_json property_to_json(const PropertyValue& value) {
  if (value.is_atom()) return atom_to_json(value.atom());
  ordered_json out;
  if (value.is_pair()) {
    out["type"] = "pair";
    out["value"] = {atom_to_json(value.pair().first), atom_to_json(value.pair().second)};
  } else {
    const auto& [a, b] = value.pair_of_pairs();
    out["type"] = "pair-of-pairs";
    out["value"] = {{atom_to_json(a.first), atom_to_json(a.second)},
                    {atom_to_json(b.first), atom_to_json(b.second)}};
  }
  return out;
}

ordered_json properties_to_json(const PropertyMap& properties) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : properties) out[key] = property_to_json(value);
  return out;
}

std::string export_jsonl(const Graph& graph) {
  std::string out;
  for (NodeId id : graph.all_nodes()) {
    const Node& node = graph.node(id);
    ordered_json line{{"kind", "node"},
                      {"handle", id},
                      {"label", node.label},
                      {"properties", properties_to_json(node.properties)}};
    out += line.dump() + "\n";
  }
  for (EdgeId id : graph.live_edges()) {
    const Edge& edge = graph.edge(id);
    ordered_json line{{"kind", "edge"},
                      {"handle", id},
                      {"source", edge.source},
                      {"target", edge.target},
                      {"label", edge.label},
                      {"properties", properties_to_json(edge.properties)}};
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace

std::string export_graph(const Graph& graph, ExportFormat format) {
  switch (format) {
    case ExportFormat::Cypher: return export_cypher(graph);
    case ExportFormat::GraphML: return export_graphml(graph);
    case ExportFormat::Jsonl: return export_jsonl(graph);
  }
  return {};
}

GraphStats compute_stats(const Graph& graph) {
  GraphStats stats;
  for (NodeId id : graph.all_nodes()) {
    stats.nodes_by_label[graph.node(id).label] += 1;
  }
  for (EdgeId id : graph.live_edges()) {
    stats.edges_by_label[graph.edge(id).label] += 1;
  }
  stats.node_total = graph.node_count();
  stats.edge_total = graph.edge_count();

  for (EdgeId id : graph.edges_with_label(edges::df)) {
    const PropertyValue* ent = graph.edge_property(id, props::ent);
    if (ent == nullptr) continue;
    const bool snapshot_owned =
        (ent->is_pair() && ent->pair().second.type() == ValueType::Time) ||
        ent->is_pair_of_pairs();
    if (snapshot_owned) {
      stats.df_snapshot_owned += 1;
    } else {
      stats.df_entity_owned += 1;
    }
  }

  for (NodeId id : graph.nodes_with_label(labels::Snapshot)) {
    const PropertyValue* node_id = graph.node_property(id, props::id);
    const PropertyValue* type = graph.node_property(id, props::type);
    if (node_id != nullptr && node_id->is_pair() && type != nullptr && type->is_atom()) {
      stats.snapshots_by_object_type[type->atom().as_string()] += 1;
    }
  }
  return stats;
}

std::string stats_to_json(const GraphStats& stats) {
  ordered_json doc;
  doc["nodes"] = {{"total", stats.node_total}, {"by_label", ordered_json::object()}};
  for (const auto& [label, count] : stats.nodes_by_label) doc["nodes"]["by_label"][label] = count;
  doc["edges"] = {{"total", stats.edge_total}, {"by_label", ordered_json::object()}};
  for (const auto& [label, count] : stats.edges_by_label) doc["edges"]["by_label"][label] = count;
  doc["df_by_owner"] = {{"Entity", stats.df_entity_owned}, {"Snapshot", stats.df_snapshot_owned}};
  doc["snapshots_by_object_type"] = ordered_json::object();
  for (const auto& [type, count] : stats.snapshots_by_object_type) {
    doc["snapshots_by_object_type"][type] = count;
  }
  return doc.dump(2) + "\n";
}

}  // namespace octekg
