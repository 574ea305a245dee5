#include "octekg/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace octekg {

namespace {

LogLevel parse_env_level() {
  const char* env = std::getenv("OCEL2TEKG_LOG_LEVEL");
  if (env == nullptr) return LogLevel::Warn;
  const std::string value = env;
  if (value == "error") return LogLevel::Error;
  if (value == "warn") return LogLevel::Warn;
  if (value == "info") return LogLevel::Info;
  if (value == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}

LogLevel& level_storage() {
  static LogLevel level = parse_env_level();
  return level;
}

std::string_view level_name(LogLevel level) {
  switch (level) {
    case LogLevel::Error: return "error";
    case LogLevel::Warn: return "warn";
    case LogLevel::Info: return "info";
    case LogLevel::Debug: return "debug";
  }
  return "?";
}

}  // namespace

LogLevel log_level() { return level_storage(); }

void set_log_level(LogLevel level) { level_storage() = level; }

void log_message(LogLevel level, std::string_view message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::cerr << "[" << level_name(level) << "] " << message << "\n";
}

}  // namespace octekg
