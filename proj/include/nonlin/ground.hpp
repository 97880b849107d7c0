#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "nonlin/errors.hpp"

namespace nonlin {

/// Subsets of the ground set are n-bit masks; point i <-> bit (1 << i).
using Mask = std::uint32_t;

/// Finite ground set {0, 1, ..., n-1}.
struct GroundSet {
    int n = 1;

    // kMaxPoints bounds the mask representation; the practically usable
    // sizes are gated by SizeCaps at the entry points.
    static constexpr int kMaxPoints = 24;

    explicit GroundSet(int points) : n(points) {
        if (n < 1 || n > kMaxPoints) {
            throw ValidationError(ValidationError::Kind::BadShape,
                                  "ground set size must be in [1, " +
                                      std::to_string(kMaxPoints) + "], got " + std::to_string(n));
        }
    }

    Mask full() const { return (Mask{1} << n) - 1; }
    std::size_t subset_count() const { return std::size_t{1} << n; }
    bool valid_mask(Mask a) const { return a <= full(); }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

inline bool mask_contains(Mask a, int point) { return (a >> point) & 1u; }
inline int mask_size(Mask a) { return std::popcount(a); }
inline int lowest_point(Mask a) { return std::countr_zero(a); }

/// "{0,2,3}"; "{}" for the empty set.
std::string set_string(Mask a);

/// Configured size limits. NONLIN_SIZE_CAP overrides the first three.
struct SizeCaps {
    int ground = 12;        // measure tables hold 2^n values
    int partition_dp = 12;  // subset DP is O(3^n)
    int covering_lp = 10;   // covering LPs have 2^n - 1 columns

    int partition_oracle = 5;    // Bell-number enumeration
    int lp_oracle_columns = 24;  // basis enumeration over C(columns, rows)

    static SizeCaps from_env();
};

}  // namespace nonlin
