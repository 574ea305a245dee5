#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octekg {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unknown event/object id passed to a lookup operation.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Dangling or dead node/edge handle.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Syntax or schema failure while reading an OCEL document. `path` points at
// the offending JSON element; `byte_offset` is set for syntax errors only.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string path,
             std::optional<std::size_t> byte_offset = std::nullopt)
      : Error(what), path_(std::move(path)), byte_offset_(byte_offset) {}

  const std::string& path() const { return path_; }
  std::optional<std::size_t> byte_offset() const { return byte_offset_; }

 private:
  std::string path_;
  std::optional<std::size_t> byte_offset_;
};

struct Violation {
  std::string constraint;  // stable slug, e.g. "duplicate-event-id"
  std::string message;     // human-readable detail naming the offending ids
};

// A log failed validation; carries the full violation list.
class LogInvalidError : public Error {
 public:
  explicit LogInvalidError(std::vector<Violation> violations)
      : Error(format(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string format(const std::vector<Violation>& vs) {
    std::string out = "invalid log (" + std::to_string(vs.size()) + " violation(s))";
    for (const auto& v : vs) out += "\n  [" + v.constraint + "] " + v.message;
    return out;
  }

  std::vector<Violation> violations_;
};

}  // namespace octekg
