#include "octekg/ocel_json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include <json.hpp>

#include "octekg/log.hpp"

namespace octekg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kMaxNestingDepth = 512;

// Owner type plus scalar kind of a declared attribute.
struct AttrDecl {
  std::string owner_type;
  std::string scalar_type;
};

ValueType scalar_kind(const std::string& name, const std::string& path) {
  if (name == "string") return ValueType::String;
  if (name == "integer") return ValueType::Integer;
  if (name == "float") return ValueType::Real;
  if (name == "boolean") return ValueType::Boolean;
  if (name == "time") return ValueType::Time;
  throw ParseError("unknown attribute value type '" + name + "'", path);
}

std::string_view scalar_name(ValueType t) {
  switch (t) {
    case ValueType::String: return "string";
    case ValueType::Integer: return "integer";
    case ValueType::Real: return "float";
    case ValueType::Boolean: return "boolean";
    case ValueType::Time: return "time";
  }
  return "string";
}

void check_depth(std::string_view text) {
  int depth = 0, max_depth = 0;
  bool in_string = false, escaped = false;
  for (char c : text) {
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{' || c == '[') {
      max_depth = std::max(max_depth, ++depth);
    } else if (c == '}' || c == ']') {
      --depth;
    }
  }
  if (max_depth > kMaxNestingDepth) {
    throw ParseError("document nesting exceeds depth limit", "$");
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError("expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", path);
  return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) {
    throw ParseError(std::string("field '") + key + "' must be a string", path + "." + key);
  }
  return v.get<std::string>();
}

Timestamp time_member(const json& obj, const char* key, const std::string& path) {
  const std::string text = string_member(obj, key, path);
  auto t = Timestamp::parse(text);
  if (!t) throw ParseError("unparseable timestamp '" + text + "'", path + "." + key);
  return *t;
}

const json& array_member(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + key + "' must be an array", path + "." + key);
  }
  return v;
}

// Optional array: missing is treated as empty.
const json* optional_array(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  if (!it->is_array()) {
    throw ParseError(std::string("field '") + key + "' must be an array", path + "." + key);
  }
  return &*it;
}

AttributeValue coerce_value(const json& v, ValueType kind, const std::string& path) {
  switch (kind) {
    case ValueType::String:
      if (!v.is_string()) throw ParseError("expected a string value", path);
      return AttributeValue::string(v.get<std::string>());
    case ValueType::Integer: {
      if (v.is_number_integer()) return AttributeValue::integer(v.get<std::int64_t>());
      if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::floor(d) == d && std::abs(d) <= 9.0e15) {
          return AttributeValue::integer(static_cast<std::int64_t>(d));
        }
      }
      throw ParseError("expected an integer value", path);
    }
    case ValueType::Real:
      if (!v.is_number()) throw ParseError("expected a numeric value", path);
      return AttributeValue::real(v.get<double>());
    case ValueType::Boolean:
      if (!v.is_boolean()) throw ParseError("expected a boolean value", path);
      return AttributeValue::boolean(v.get<bool>());
    case ValueType::Time: {
      if (!v.is_string()) throw ParseError("expected a timestamp string", path);
      auto t = Timestamp::parse(v.get<std::string>());
      if (!t) throw ParseError("unparseable timestamp '" + v.get<std::string>() + "'", path);
      return AttributeValue::time(*t);
    }
  }
  throw ParseError("unsupported value", path);
}

// Parses the objectTypes / eventTypes declaration arrays. An attribute name
// may be declared for at most one type of the same kind (the attribute-type
// assignment is a function).
std::map<std::string, AttrDecl> parse_declarations(const json& types, const std::string& kind,
                                                   std::set<std::string>& declared_types) {
  std::map<std::string, AttrDecl> decls;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const std::string path = "$." + kind + "[" + std::to_string(i) + "]";
    const std::string name = string_member(types[i], "name", path);
    declared_types.insert(name);
    const json* attrs = optional_array(types[i], "attributes", path);
    if (attrs == nullptr) continue;
    for (std::size_t j = 0; j < attrs->size(); ++j) {
      const std::string attr_path = path + ".attributes[" + std::to_string(j) + "]";
      const std::string attr_name = string_member((*attrs)[j], "name", attr_path);
      const std::string attr_type = string_member((*attrs)[j], "type", attr_path);
      scalar_kind(attr_type, attr_path + ".type");  // reject unknown kinds
      auto [it, inserted] = decls.emplace(attr_name, AttrDecl{name, attr_type});
      if (!inserted && (it->second.owner_type != name || it->second.scalar_type != attr_type)) {
        throw ParseError("attribute '" + attr_name + "' already declared for type '" +
                             it->second.owner_type + "'",
                         attr_path);
      }
    }
  }
  return decls;
}

}  // namespace

OcelLog parse_ocel_json(std::string_view text, std::vector<std::string>* warnings) {
  check_depth(text);

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "$", e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "$");
  }
  if (!doc.is_object()) throw ParseError("document root must be an object", "$");

  const json& object_types = array_member(doc, "objectTypes", "$");
  const json& event_types = array_member(doc, "eventTypes", "$");
  const json& objects = array_member(doc, "objects", "$");
  const json& events = array_member(doc, "events", "$");

  std::set<std::string> declared_object_types, declared_event_types;
  auto object_attr_decls = parse_declarations(object_types, "objectTypes", declared_object_types);
  auto event_attr_decls = parse_declarations(event_types, "eventTypes", declared_event_types);

  OcelLog::Builder builder;
  for (const auto& [attr, decl] : object_attr_decls) {
    builder.declare_object_attribute(attr, decl.owner_type);
  }
  for (const auto& [attr, decl] : event_attr_decls) {
    builder.declare_event_attribute(attr, decl.owner_type);
  }

  // First pass over objects: register ids so relationships can be checked
  // regardless of declaration order, and find the earliest timestamp for
  // placing untimed attribute entries.
  std::set<std::string> object_ids;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string path = "$.objects[" + std::to_string(i) + "]";
    const std::string id = string_member(objects[i], "id", path);
    if (!object_ids.insert(id).second) {
      throw ParseError("duplicate object id '" + id + "'", path + ".id");
    }
  }

  std::optional<Timestamp> min_time;
  auto note_time = [&min_time](Timestamp t) {
    if (!min_time || t < *min_time) min_time = t;
  };
  for (const auto& ev : events) {
    if (ev.is_object() && ev.contains("time") && ev["time"].is_string()) {
      if (auto t = Timestamp::parse(ev["time"].get<std::string>())) note_time(*t);
    }
  }
  for (const auto& ob : objects) {
    if (!ob.is_object() || !ob.contains("attributes") || !ob["attributes"].is_array()) continue;
    for (const auto& attr : ob["attributes"]) {
      if (attr.is_object() && attr.contains("time") && attr["time"].is_string()) {
        if (auto t = Timestamp::parse(attr["time"].get<std::string>())) note_time(*t);
      }
    }
  }
  const Timestamp fallback_time =
      min_time ? Timestamp::from_millis(min_time->millis() - 1) : Timestamp::from_millis(0);

  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string path = "$.objects[" + std::to_string(i) + "]";
    const std::string id = string_member(objects[i], "id", path);
    const std::string type = string_member(objects[i], "type", path);
    if (!declared_object_types.count(type)) {
      throw ParseError("object type '" + type + "' is not declared", path + ".type");
    }
    builder.add_object(id, type);

    if (const json* attrs = optional_array(objects[i], "attributes", path)) {
      for (std::size_t j = 0; j < attrs->size(); ++j) {
        const std::string attr_path = path + ".attributes[" + std::to_string(j) + "]";
        const json& entry = (*attrs)[j];
        const std::string name = string_member(entry, "name", attr_path);
        auto decl = object_attr_decls.find(name);
        if (decl == object_attr_decls.end()) {
          throw ParseError("object attribute '" + name + "' is not declared", attr_path);
        }
        Timestamp time = fallback_time;
        if (entry.contains("time") && !entry["time"].is_null()) {
          time = time_member(entry, "time", attr_path);
        } else {
          const std::string note = attr_path + ": missing time, assigned " + time.to_iso8601();
          log_warn(note);
          if (warnings != nullptr) warnings->push_back(note);
        }
        const json& value = member(entry, "value", attr_path);
        builder.set_object_attribute(
            id, name,
            time,
            coerce_value(value, scalar_kind(decl->second.scalar_type, attr_path),
                         attr_path + ".value"));
      }
    }
    if (const json* rels = optional_array(objects[i], "relationships", path)) {
      for (std::size_t j = 0; j < rels->size(); ++j) {
        const std::string rel_path = path + ".relationships[" + std::to_string(j) + "]";
        const std::string target = string_member((*rels)[j], "objectId", rel_path);
        if (!object_ids.count(target)) {
          throw ParseError("relationship references undeclared object '" + target + "'",
                           rel_path + ".objectId");
        }
        std::string qualifier;
        if ((*rels)[j].contains("qualifier") && !(*rels)[j]["qualifier"].is_null()) {
          qualifier = string_member((*rels)[j], "qualifier", rel_path);
        }
        builder.relate_objects(id, qualifier, target);
      }
    }
  }

  std::set<std::string> event_ids;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string path = "$.events[" + std::to_string(i) + "]";
    const std::string id = string_member(events[i], "id", path);
    if (!event_ids.insert(id).second) {
      throw ParseError("duplicate event id '" + id + "'", path + ".id");
    }
    const std::string type = string_member(events[i], "type", path);
    if (!declared_event_types.count(type)) {
      throw ParseError("event type '" + type + "' is not declared", path + ".type");
    }
    builder.add_event(id, type, time_member(events[i], "time", path));

    if (const json* attrs = optional_array(events[i], "attributes", path)) {
      for (std::size_t j = 0; j < attrs->size(); ++j) {
        const std::string attr_path = path + ".attributes[" + std::to_string(j) + "]";
        const json& entry = (*attrs)[j];
        const std::string name = string_member(entry, "name", attr_path);
        if (entry.contains("time")) {
          throw ParseError("event attribute entries must not carry a time", attr_path + ".time");
        }
        auto decl = event_attr_decls.find(name);
        if (decl == event_attr_decls.end()) {
          throw ParseError("event attribute '" + name + "' is not declared", attr_path);
        }
        const json& value = member(entry, "value", attr_path);
        builder.set_event_attribute(
            id, name,
            coerce_value(value, scalar_kind(decl->second.scalar_type, attr_path),
                         attr_path + ".value"));
      }
    }
    if (const json* rels = optional_array(events[i], "relationships", path)) {
      for (std::size_t j = 0; j < rels->size(); ++j) {
        const std::string rel_path = path + ".relationships[" + std::to_string(j) + "]";
        const std::string target = string_member((*rels)[j], "objectId", rel_path);
        if (!object_ids.count(target)) {
          throw ParseError("relationship references undeclared object '" + target + "'",
                           rel_path + ".objectId");
        }
        std::string qualifier;
        if ((*rels)[j].contains("qualifier") && !(*rels)[j]["qualifier"].is_null()) {
          qualifier = string_member((*rels)[j], "qualifier", rel_path);
        }
        builder.relate_event_object(id, qualifier, target);
      }
    }
  }

  OcelLog log = builder.build();
  if (auto violations = validate_log(log); !violations.empty()) {
    throw LogInvalidError(std::move(violations));
  }
  return log;
}

namespace {

ordered_json value_to_json(const AttributeValue& v) {
  switch (v.type()) {
    case ValueType::String: return v.as_string();
    case ValueType::Integer: return v.as_integer();
    case ValueType::Real: return v.as_real();
    case ValueType::Boolean: return v.as_boolean();
    case ValueType::Time: return v.as_time().to_iso8601();
  }
  return nullptr;
}

}  // namespace

std::string write_ocel_json(const OcelLog& log) {
  // Scalar kind per attribute, derived from recorded values ("string" for
  // attributes that are declared but never valued).
  std::map<std::string, ValueType> object_attr_kinds, event_attr_kinds;
  for (const auto& entry : log.object_attribute_values()) {
    object_attr_kinds.emplace(entry.attribute, entry.value.type());
  }
  for (const auto& entry : log.event_attribute_values()) {
    event_attr_kinds.emplace(entry.attribute, entry.value.type());
  }

  // Type declarations: every type that occurs on a record or owns an
  // attribute, in sorted order.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> object_type_attrs,
      event_type_attrs;
  for (const auto& o : log.objects()) object_type_attrs[o.type];
  for (const auto& e : log.events()) event_type_attrs[e.type];
  for (const auto& [attr, owner] : log.object_attribute_types()) {
    auto kind = object_attr_kinds.count(attr) ? object_attr_kinds[attr] : ValueType::String;
    object_type_attrs[owner].emplace_back(attr, std::string(scalar_name(kind)));
  }
  for (const auto& [attr, owner] : log.event_attribute_types()) {
    auto kind = event_attr_kinds.count(attr) ? event_attr_kinds[attr] : ValueType::String;
    event_type_attrs[owner].emplace_back(attr, std::string(scalar_name(kind)));
  }

  ordered_json doc;
  doc["objectTypes"] = ordered_json::array();
  for (const auto& [type, attrs] : object_type_attrs) {
    ordered_json entry{{"name", type}, {"attributes", ordered_json::array()}};
    for (const auto& [attr, kind] : attrs) {
      entry["attributes"].push_back({{"name", attr}, {"type", kind}});
    }
    doc["objectTypes"].push_back(std::move(entry));
  }
  doc["eventTypes"] = ordered_json::array();
  for (const auto& [type, attrs] : event_type_attrs) {
    ordered_json entry{{"name", type}, {"attributes", ordered_json::array()}};
    for (const auto& [attr, kind] : attrs) {
      entry["attributes"].push_back({{"name", attr}, {"type", kind}});
    }
    doc["eventTypes"].push_back(std::move(entry));
  }

  doc["objects"] = ordered_json::array();
  for (const auto& o : log.objects()) {
    ordered_json entry{{"id", o.id}, {"type", o.type}};
    ordered_json attrs = ordered_json::array();
    for (const auto& av : log.object_attribute_values()) {
      if (av.object_id != o.id) continue;
      attrs.push_back({{"name", av.attribute},
                       {"time", av.time.to_iso8601()},
                       {"value", value_to_json(av.value)}});
    }
    ordered_json rels = ordered_json::array();
    for (const auto& rel : log.o2o()) {
      if (rel.source_id != o.id) continue;
      rels.push_back({{"objectId", rel.target_id}, {"qualifier", rel.qualifier}});
    }
    entry["attributes"] = std::move(attrs);
    entry["relationships"] = std::move(rels);
    doc["objects"].push_back(std::move(entry));
  }

  doc["events"] = ordered_json::array();
  for (const auto& e : log.events()) {
    ordered_json entry{{"id", e.id}, {"type", e.type}, {"time", e.time.to_iso8601()}};
    ordered_json attrs = ordered_json::array();
    for (const auto* av : log.event_attributes(e.id)) {
      attrs.push_back({{"name", av->attribute}, {"value", value_to_json(av->value)}});
    }
    ordered_json rels = ordered_json::array();
    for (const auto& rel : log.e2o()) {
      if (rel.event_id != e.id) continue;
      rels.push_back({{"objectId", rel.object_id}, {"qualifier", rel.qualifier}});
    }
    entry["attributes"] = std::move(attrs);
    entry["relationships"] = std::move(rels);
    doc["events"].push_back(std::move(entry));
  }

  return doc.dump(2) + "\n";
}

}  // namespace octekg
