#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace chroma {

// CHROMA_PLANES_LOG: 0 or unset = silent, 1 = progress, 2 = detail.
inline int log_level() {
    static const int level = [] {
        const char* raw = std::getenv("CHROMA_PLANES_LOG");
        return raw ? std::atoi(raw) : 0;
    }();
    return level;
}

inline void log_line(int level, const std::string& msg) {
    if (log_level() >= level) std::fprintf(stderr, "[chroma-planes] %s\n", msg.c_str());
}

}  // namespace chroma
