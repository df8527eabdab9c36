#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace hyperchroma {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

// Level comes from HYPERCHROMA_LOG (quiet|info|debug); defaults to quiet so
// library output never pollutes machine-readable stdout.
inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("HYPERCHROMA_LOG");
        if (env == nullptr) return LogLevel::quiet;
        if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::info;
        return LogLevel::quiet;
    }();
    return level;
}

inline void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::fprintf(stderr, "[hyperchroma] %s\n", msg.c_str());
}

inline void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) std::fprintf(stderr, "[hyperchroma:debug] %s\n", msg.c_str());
}

}  // namespace hyperchroma
