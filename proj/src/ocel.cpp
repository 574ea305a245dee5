#include "octekg/ocel.hpp"

#include <algorithm>
#include <array>

namespace octekg {

namespace {

constexpr std::array<std::string_view, 3> kReservedEventAttrs{"id", "act", "time"};
constexpr std::array<std::string_view, 3> kReservedObjectAttrs{"id", "type", "time"};

bool is_reserved(std::string_view name, const std::array<std::string_view, 3>& reserved) {
  return std::find(reserved.begin(), reserved.end(), name) != reserved.end();
}

}  // namespace

OcelLog::Builder& OcelLog::Builder::add_event(std::string id, std::string type, Timestamp time) {
  log_.events_.push_back({std::move(id), std::move(type), time});
  return *this;
}

OcelLog::Builder& OcelLog::Builder::add_object(std::string id, std::string type) {
  log_.objects_.push_back({std::move(id), std::move(type)});
  return *this;
}

OcelLog::Builder& OcelLog::Builder::declare_event_attribute(std::string attribute,
                                                            std::string event_type) {
  log_.event_attr_types_[std::move(attribute)] = std::move(event_type);
  return *this;
}

OcelLog::Builder& OcelLog::Builder::declare_object_attribute(std::string attribute,
                                                             std::string object_type) {
  log_.object_attr_types_[std::move(attribute)] = std::move(object_type);
  return *this;
}

OcelLog::Builder& OcelLog::Builder::set_event_attribute(std::string event_id,
                                                        std::string attribute,
                                                        AttributeValue value) {
  log_.event_attr_values_.push_back({std::move(event_id), std::move(attribute), std::move(value)});
  return *this;
}

OcelLog::Builder& OcelLog::Builder::set_object_attribute(std::string object_id,
                                                         std::string attribute, Timestamp time,
                                                         AttributeValue value) {
  log_.object_attr_values_.push_back(
      {std::move(object_id), std::move(attribute), time, std::move(value)});
  return *this;
}

OcelLog::Builder& OcelLog::Builder::relate_event_object(std::string event_id,
                                                        std::string qualifier,
                                                        std::string object_id) {
  log_.e2o_.push_back({std::move(event_id), std::move(qualifier), std::move(object_id)});
  return *this;
}

OcelLog::Builder& OcelLog::Builder::relate_objects(std::string source_id, std::string qualifier,
                                                   std::string target_id) {
  log_.o2o_.push_back({std::move(source_id), std::move(qualifier), std::move(target_id)});
  return *this;
}

OcelLog OcelLog::Builder::build() const {
  OcelLog log = log_;

  std::sort(log.events_.begin(), log.events_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.time, a.id, a.type) < std::tie(b.time, b.id, b.type);
  });
  log.events_.erase(std::unique(log.events_.begin(), log.events_.end()), log.events_.end());

  std::sort(log.objects_.begin(), log.objects_.end());
  log.objects_.erase(std::unique(log.objects_.begin(), log.objects_.end()), log.objects_.end());

  std::sort(log.event_attr_values_.begin(), log.event_attr_values_.end(),
            [](const auto& a, const auto& b) {
              if (auto c = a.event_id <=> b.event_id; c != 0) return c < 0;
              if (auto c = a.attribute <=> b.attribute; c != 0) return c < 0;
              return a.value < b.value;
            });
  log.event_attr_values_.erase(
      std::unique(log.event_attr_values_.begin(), log.event_attr_values_.end()),
      log.event_attr_values_.end());

  std::sort(log.object_attr_values_.begin(), log.object_attr_values_.end(),
            [](const auto& a, const auto& b) {
              if (auto c = a.object_id <=> b.object_id; c != 0) return c < 0;
              if (auto c = a.attribute <=> b.attribute; c != 0) return c < 0;
              if (a.time != b.time) return a.time < b.time;
              return a.value < b.value;
            });
  log.object_attr_values_.erase(
      std::unique(log.object_attr_values_.begin(), log.object_attr_values_.end()),
      log.object_attr_values_.end());

  std::sort(log.e2o_.begin(), log.e2o_.end());
  log.e2o_.erase(std::unique(log.e2o_.begin(), log.e2o_.end()), log.e2o_.end());

  std::sort(log.o2o_.begin(), log.o2o_.end());
  log.o2o_.erase(std::unique(log.o2o_.begin(), log.o2o_.end()), log.o2o_.end());

  for (std::size_t i = 0; i < log.events_.size(); ++i) {
    log.event_index_.emplace(log.events_[i].id, i);
  }
  for (std::size_t i = 0; i < log.objects_.size(); ++i) {
    log.object_index_.emplace(log.objects_[i].id, i);
  }
  return log;
}

bool OcelLog::has_event(std::string_view id) const {
  return event_index_.find(id) != event_index_.end();
}

bool OcelLog::has_object(std::string_view id) const {
  return object_index_.find(id) != object_index_.end();
}

const EventRecord& OcelLog::event(std::string_view id) const {
  auto it = event_index_.find(id);
  if (it == event_index_.end()) throw LookupError("unknown event id: " + std::string(id));
  return events_[it->second];
}

const ObjectRecord& OcelLog::object(std::string_view id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) throw LookupError("unknown object id: " + std::string(id));
  return objects_[it->second];
}

std::vector<const EventAttributeEntry*> OcelLog::event_attributes(std::string_view event_id) const {
  std::vector<const EventAttributeEntry*> out;
  auto it = std::lower_bound(event_attr_values_.begin(), event_attr_values_.end(), event_id,
                             [](const auto& e, std::string_view id) { return e.event_id < id; });
  for (; it != event_attr_values_.end() && it->event_id == event_id; ++it) out.push_back(&*it);
  return out;
}

std::optional<AttributeValue> resolve_attribute_at(const OcelLog& log, std::string_view object_id,
                                                   std::string_view attribute, Timestamp t) {
  log.object(object_id);  // existence check

  // Entries are sorted by (object, attribute, time); find the last one at or
  // before t within the (object, attribute) run.
  const auto& entries = log.object_attribute_values();
  auto key_less = [](const ObjectAttributeEntry& e,
                     const std::tuple<std::string_view, std::string_view, Timestamp>& k) {
    return std::tie(e.object_id, e.attribute, e.time) < k;
  };
  auto it = std::lower_bound(entries.begin(), entries.end(),
                             std::make_tuple(object_id, attribute, t), key_less);
  // `it` is the first entry with key > (object, attr, t) or == it; step back
  // over an exact-time match.
  if (it != entries.end() && it->object_id == object_id && it->attribute == attribute &&
      it->time == t) {
    return it->value;
  }
  if (it == entries.begin()) return std::nullopt;
  --it;
  if (it->object_id != object_id || it->attribute != attribute) return std::nullopt;
  return it->value;
}

std::vector<Timestamp> change_times(const OcelLog& log, std::string_view object_id) {
  log.object(object_id);  // existence check

  const auto& entries = log.object_attribute_values();
  auto it = std::lower_bound(entries.begin(), entries.end(), object_id,
                             [](const auto& e, std::string_view id) { return e.object_id < id; });
  std::vector<Timestamp> times;
  for (; it != entries.end() && it->object_id == object_id; ++it) times.push_back(it->time);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

std::set<std::string> observed_event_types(const OcelLog& log) {
  std::set<std::string> out;
  for (const auto& e : log.events()) out.insert(e.type);
  return out;
}

std::vector<Violation> validate_log(const OcelLog& log) {
  std::vector<Violation> out;
  auto report = [&out](std::string constraint, std::string message) {
    out.push_back({std::move(constraint), std::move(message)});
  };

  // id uniqueness and disjointness
  std::set<std::string> event_ids, object_ids;
  for (const auto& e : log.events()) {
    if (!event_ids.insert(e.id).second) report("duplicate-event-id", "event id " + e.id);
  }
  for (const auto& o : log.objects()) {
    if (!object_ids.insert(o.id).second) report("duplicate-object-id", "object id " + o.id);
  }
  for (const auto& id : event_ids) {
    if (object_ids.count(id)) {
      report("event-object-id-overlap", "id " + id + " used for both an event and an object");
    }
  }

  for (const auto& [attr, _] : log.event_attribute_types()) {
    if (is_reserved(attr, kReservedEventAttrs)) {
      report("reserved-event-attr-name", "event attribute " + attr);
    }
  }
  for (const auto& [attr, _] : log.object_attribute_types()) {
    if (is_reserved(attr, kReservedObjectAttrs)) {
      report("reserved-object-attr-name", "object attribute " + attr);
    }
  }

  // event attribute entries: declared, type-consistent, non-dangling
  const auto& eatypes = log.event_attribute_types();
  for (const auto& entry : log.event_attribute_values()) {
    if (!log.has_event(entry.event_id)) {
      report("dangling-event-attr-value",
             "event attribute " + entry.attribute + " on missing event " + entry.event_id);
      continue;
    }
    auto it = eatypes.find(entry.attribute);
    if (it == eatypes.end()) {
      report("undeclared-event-attr",
             "event attribute " + entry.attribute + " on event " + entry.event_id);
    } else if (it->second != log.event(entry.event_id).type) {
      report("event-attr-type-mismatch",
             "attribute " + entry.attribute + " belongs to event type " + it->second +
                 " but event " + entry.event_id + " has type " + log.event(entry.event_id).type);
    }
  }

  const auto& oatypes = log.object_attribute_types();
  for (const auto& entry : log.object_attribute_values()) {
    if (!log.has_object(entry.object_id)) {
      report("dangling-object-attr-value",
             "object attribute " + entry.attribute + " on missing object " + entry.object_id);
      continue;
    }
    auto it = oatypes.find(entry.attribute);
    if (it == oatypes.end()) {
      report("undeclared-object-attr",
             "object attribute " + entry.attribute + " on object " + entry.object_id);
    } else if (it->second != log.object(entry.object_id).type) {
      report("object-attr-type-mismatch",
             "attribute " + entry.attribute + " belongs to object type " + it->second +
                 " but object " + entry.object_id + " has type " +
                 log.object(entry.object_id).type);
    }
  }

  // conflicting writes: two values for one point of the (partial) function
  const auto& eav = log.event_attribute_values();
  for (std::size_t i = 1; i < eav.size(); ++i) {
    if (eav[i].event_id == eav[i - 1].event_id && eav[i].attribute == eav[i - 1].attribute) {
      report("conflicting-event-attr-value",
             "attribute " + eav[i].attribute + " has two values on event " + eav[i].event_id);
    }
  }
  const auto& oav = log.object_attribute_values();
  for (std::size_t i = 1; i < oav.size(); ++i) {
    if (oav[i].object_id == oav[i - 1].object_id && oav[i].attribute == oav[i - 1].attribute &&
        oav[i].time == oav[i - 1].time) {
      report("conflicting-object-attr-value",
             "attribute " + oav[i].attribute + " has two values on object " + oav[i].object_id +
                 " at " + oav[i].time.to_iso8601());
    }
  }

  // cross-type values for one attribute name
  std::map<std::string, ValueType> event_attr_value_types;
  for (const auto& entry : eav) {
    auto [it, inserted] = event_attr_value_types.emplace(entry.attribute, entry.value.type());
    if (!inserted && it->second != entry.value.type()) {
      report("mixed-type-event-attr", "event attribute " + entry.attribute + " mixes " +
                                          std::string(value_type_name(it->second)) + " and " +
                                          std::string(value_type_name(entry.value.type())));
    }
  }
  std::map<std::string, ValueType> object_attr_value_types;
  for (const auto& entry : oav) {
    auto [it, inserted] = object_attr_value_types.emplace(entry.attribute, entry.value.type());
    if (!inserted && it->second != entry.value.type()) {
      report("mixed-type-object-attr", "object attribute " + entry.attribute + " mixes " +
                                           std::string(value_type_name(it->second)) + " and " +
                                           std::string(value_type_name(entry.value.type())));
    }
  }

  // referential integrity of the relation sets
  for (const auto& rel : log.e2o()) {
    if (!log.has_event(rel.event_id)) {
      report("dangling-e2o-event", "e2o relation references missing event " + rel.event_id);
    }
    if (!log.has_object(rel.object_id)) {
      report("dangling-e2o-object", "e2o relation references missing object " + rel.object_id);
    }
  }
  for (const auto& rel : log.o2o()) {
    if (!log.has_object(rel.source_id)) {
      report("dangling-o2o-source", "o2o relation references missing object " + rel.source_id);
    }
    if (!log.has_object(rel.target_id)) {
      report("dangling-o2o-target", "o2o relation references missing object " + rel.target_id);
    }
  }

  return out;
}

}  // namespace octekg
