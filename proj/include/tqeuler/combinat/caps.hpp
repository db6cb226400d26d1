#pragma once

#include <tqeuler/error.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <string_view>

namespace tqeuler {

/*
 * Upper bounds for the brute-force enumerators. Exceeding a bound is an error,
 * never a silent truncation. TQEULER_MAX_CUTOFF raises every bound to at least
 * its value.
 */
struct enumeration_caps {
    int dist_box = 8;
    int dyck = 8;
    int md_star = 6;
    int delta_prime = 6;
    int sop = 6;
    int m_path = 7;
    int l_path = 6;
    int alternating = 9;

    static enumeration_caps from_env()
    {
        enumeration_caps caps;
        if (const char* raw = std::getenv("TQEULER_MAX_CUTOFF")) {
            char* end = nullptr;
            const long v = std::strtol(raw, &end, 10);
            if (end != raw && *end == '\0' && v > 0 && v < 64)
                caps.raise_to(static_cast<int>(v));
        }
        return caps;
    }

    void raise_to(int v)
    {
        for (int* cap : {&dist_box, &dyck, &md_star, &delta_prime, &sop, &m_path, &l_path, &alternating})
            *cap = std::max(*cap, v);
    }
};

inline void require_within(int value, int cap, std::string_view what)
{
    if (value > cap)
        throw error(errc::cutoff_exceeded,
                    std::string(what) + " " + std::to_string(value) + " exceeds cutoff " + std::to_string(cap));
}

} // namespace tqeuler
