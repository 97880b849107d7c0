#include "nonlin/ground.hpp"

#include <cstdlib>

namespace nonlin {

std::string set_string(Mask a) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; a >> i; ++i) {
        if (!mask_contains(a, i)) continue;
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    out += "}";
    return out;
}

SizeCaps SizeCaps::from_env() {
    SizeCaps caps;
    if (const char* raw = std::getenv("NONLIN_SIZE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= GroundSet::kMaxPoints) {
            caps.ground = static_cast<int>(v);
            caps.partition_dp = static_cast<int>(v);
            caps.covering_lp = static_cast<int>(v);
        }
    }
    return caps;
}

}  // namespace nonlin
