#include "qcp/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace qcp {

LogLevel log_level() {
  static LogLevel lvl = [] {
    const char* env = std::getenv("QCP_LOG");
    if (!env) return LogLevel::Warn;
    if (std::strcmp(env, "error") == 0) return LogLevel::Error;
    if (std::strcmp(env, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return lvl;
}

void log(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "[qcp:%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

}  // namespace qcp
