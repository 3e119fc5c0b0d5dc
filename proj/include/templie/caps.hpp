#pragma once

#include <cstdlib>
#include <string>

namespace templie {

// TEMPLIE_MAX_N overrides built-in size caps when set to a positive integer.
inline int env_max_n(int fallback) {
    const char* v = std::getenv("TEMPLIE_MAX_N");
    if (v == nullptr) return fallback;
    try {
        int n = std::stoi(v);
        return n > 0 ? n : fallback;
    } catch (...) {
        return fallback;
    }
}

}  // namespace templie
