#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "octekg/timestamp.hpp"

namespace octekg {

enum class ValueType { String, Integer, Real, Boolean, Time };

std::string_view value_type_name(ValueType t);

// Atomic attribute value. Equality and ordering are type-aware: values of
// different types never compare equal and order by type tag first.
class AttributeValue {
 public:
  AttributeValue() : v_(std::string{}) {}

  static AttributeValue string(std::string s) { return AttributeValue(Storage(std::move(s))); }
  static AttributeValue integer(std::int64_t i) { return AttributeValue(Storage(i)); }
  static AttributeValue real(double d) { return AttributeValue(Storage(d)); }
  static AttributeValue boolean(bool b) { return AttributeValue(Storage(b)); }
  static AttributeValue time(Timestamp t) { return AttributeValue(Storage(t)); }

  ValueType type() const { return static_cast<ValueType>(v_.index()); }

  const std::string& as_string() const { return std::get<std::string>(v_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  double as_real() const { return std::get<double>(v_); }
  bool as_boolean() const { return std::get<bool>(v_); }
  Timestamp as_time() const { return std::get<Timestamp>(v_); }

  // Natural unquoted text form (timestamps in ISO-8601 UTC).
  std::string to_string() const;

  friend bool operator==(const AttributeValue& a, const AttributeValue& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const AttributeValue& a, const AttributeValue& b) {
    return a.v_ < b.v_;
  }

 private:
  using Storage = std::variant<std::string, std::int64_t, double, bool, Timestamp>;

  explicit AttributeValue(Storage v) : v_(std::move(v)) {}

  Storage v_;
};

}  // namespace octekg
