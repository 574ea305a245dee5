#include "octekg/value.hpp"

#include <charconv>

namespace octekg {

std::string_view value_type_name(ValueType t) {
  switch (t) {
    case ValueType::String: return "string";
    case ValueType::Integer: return "integer";
    case ValueType::Real: return "real";
    case ValueType::Boolean: return "boolean";
    case ValueType::Time: return "time";
  }
  return "unknown";
}

std::string AttributeValue::to_string() const {
  switch (type()) {
    case ValueType::String:
      return as_string();
    case ValueType::Integer:
      return std::to_string(as_integer());
    case ValueType::Real: {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), as_real());
      return std::string(buf, end);
    }
    case ValueType::Boolean:
      return as_boolean() ? "true" : "false";
    case ValueType::Time:
      return as_time().to_iso8601();
  }
  return {};
}

}  // namespace octekg
