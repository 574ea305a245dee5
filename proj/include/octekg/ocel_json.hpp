#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "octekg/ocel.hpp"

namespace octekg {

// Reads an OCEL 2.0 JSON exchange document (objectTypes / eventTypes /
// objects / events) into a validated OcelLog.
//
// Throws ParseError for malformed JSON (with byte offset) and for schema
// violations (missing fields, unknown type references, unparseable
// timestamps, duplicate ids — with the JSON path), and LogInvalidError when
// the parsed log fails validate_log. Object attribute entries without a
// `time` are placed one millisecond before the earliest timestamp in the
// document and reported through `warnings`.
OcelLog parse_ocel_json(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Serializes a log back to the exchange format. Deterministic: components
// are emitted in canonical order, timestamps as `YYYY-MM-DDTHH:MM:SS.sssZ`.
// Re-parsing the output yields a log equal to the input.
std::string write_ocel_json(const OcelLog& log);

}  // namespace octekg
