#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "octekg/error.hpp"
#include "octekg/timestamp.hpp"
#include "octekg/value.hpp"

namespace octekg {

struct EventRecord {
  std::string id;
  std::string type;
  Timestamp time;

  friend auto operator<=>(const EventRecord&, const EventRecord&) = default;
};

struct ObjectRecord {
  std::string id;
  std::string type;

  friend auto operator<=>(const ObjectRecord&, const ObjectRecord&) = default;
};

struct EventAttributeEntry {
  std::string event_id;
  std::string attribute;
  AttributeValue value;

  friend bool operator==(const EventAttributeEntry&, const EventAttributeEntry&) = default;
};

struct ObjectAttributeEntry {
  std::string object_id;
  std::string attribute;
  Timestamp time;
  AttributeValue value;

  friend bool operator==(const ObjectAttributeEntry&, const ObjectAttributeEntry&) = default;
};

struct EventObjectRelation {
  std::string event_id;
  std::string qualifier;
  std::string object_id;

  friend auto operator<=>(const EventObjectRelation&, const EventObjectRelation&) = default;
};

struct ObjectObjectRelation {
  std::string source_id;
  std::string qualifier;
  std::string target_id;

  friend auto operator<=>(const ObjectObjectRelation&, const ObjectObjectRelation&) = default;
};

// In-memory object-centric event log: events and objects with types, typed
// attribute declarations, event attribute values, time-stamped object
// attribute values, and qualified event-to-object / object-to-object
// relations. Immutable once built; components are canonically ordered so two
// semantically equal logs have identical storage.
class OcelLog {
 public:
  class Builder;

  const std::vector<EventRecord>& events() const { return events_; }
  const std::vector<ObjectRecord>& objects() const { return objects_; }
  const std::map<std::string, std::string>& event_attribute_types() const {
    return event_attr_types_;
  }
  const std::map<std::string, std::string>& object_attribute_types() const {
    return object_attr_types_;
  }
  const std::vector<EventAttributeEntry>& event_attribute_values() const {
    return event_attr_values_;
  }
  const std::vector<ObjectAttributeEntry>& object_attribute_values() const {
    return object_attr_values_;
  }
  const std::vector<EventObjectRelation>& e2o() const { return e2o_; }
  const std::vector<ObjectObjectRelation>& o2o() const { return o2o_; }

  bool has_event(std::string_view id) const;
  bool has_object(std::string_view id) const;
  const EventRecord& event(std::string_view id) const;    // throws LookupError
  const ObjectRecord& object(std::string_view id) const;  // throws LookupError

  // Event attribute values defined for one event, keyed by attribute name.
  std::vector<const EventAttributeEntry*> event_attributes(std::string_view event_id) const;

  friend bool operator==(const OcelLog&, const OcelLog&) = default;

 private:
  std::vector<EventRecord> events_;              // sorted by (time, id)
  std::vector<ObjectRecord> objects_;            // sorted by id
  std::map<std::string, std::string> event_attr_types_;
  std::map<std::string, std::string> object_attr_types_;
  std::vector<EventAttributeEntry> event_attr_values_;    // sorted by (event, attr)
  std::vector<ObjectAttributeEntry> object_attr_values_;  // sorted by (object, attr, time)
  std::vector<EventObjectRelation> e2o_;  // sorted
  std::vector<ObjectObjectRelation> o2o_;  // sorted

  std::map<std::string, std::size_t, std::less<>> event_index_;
  std::map<std::string, std::size_t, std::less<>> object_index_;
};

class OcelLog::Builder {
 public:
  Builder& add_event(std::string id, std::string type, Timestamp time);
  Builder& add_object(std::string id, std::string type);
  Builder& declare_event_attribute(std::string attribute, std::string event_type);
  Builder& declare_object_attribute(std::string attribute, std::string object_type);
  Builder& set_event_attribute(std::string event_id, std::string attribute, AttributeValue value);
  Builder& set_object_attribute(std::string object_id, std::string attribute, Timestamp time,
                                AttributeValue value);
  Builder& relate_event_object(std::string event_id, std::string qualifier, std::string object_id);
  Builder& relate_objects(std::string source_id, std::string qualifier, std::string target_id);

  // Canonicalizes order and drops exact duplicates (set semantics).
  // Performs no validation; see validate_log.
  OcelLog build() const;

 private:
  OcelLog log_;
};

// The latest value of `attribute` on `object` recorded at or before `t`,
// or nullopt if no value was recorded yet. Throws LookupError for an
// unknown object id.
std::optional<AttributeValue> resolve_attribute_at(const OcelLog& log, std::string_view object_id,
                                                   std::string_view attribute, Timestamp t);

// Ascending, duplicate-free timestamps at which any attribute of the object
// has a recorded value. Throws LookupError for an unknown object id.
std::vector<Timestamp> change_times(const OcelLog& log, std::string_view object_id);

// Structural validation: id uniqueness and disjointness, attribute/type
// agreement, referential integrity of relations and attribute entries,
// conflicting same-instant writes, mixed-type attribute values, and
// attribute names that collide with reserved graph property keys.
std::vector<Violation> validate_log(const OcelLog& log);

// Event types that actually occur in the log.
std::set<std::string> observed_event_types(const OcelLog& log);

}  // namespace octekg
