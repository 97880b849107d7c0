#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nonlin/ground.hpp"
#include "nonlin/rational.hpp"

namespace nonlin {

/// A monotone measure (capacity) on the full power set of a finite ground
/// set: mu(empty) = 0, A subset of B implies mu(A) <= mu(B). Additivity is
/// not assumed. Continuity from above/below is automatic here: on a finite
/// ground set every monotone set sequence stabilizes.
///
/// Immutable after construction; operations on it are pure functions.
struct MonotoneMeasure {
    GroundSet ground;
    std::vector<Rational> values;  // size 2^n, values[mask] = mu(mask)

    const Rational& at(Mask a) const { return values[a]; }
};

/// Validates and builds a measure. values must hold 2^n entries indexed by
/// subset mask. Throws ValidationError: NonZeroEmpty, NegativeValue, or
/// NonMonotone with a violating pair A subset of B (monotonicity is checked
/// on the cover relation A vs A + {x}, which suffices by transitivity).
MonotoneMeasure make_measure(GroundSet ground, std::vector<Rational> values,
                             const SizeCaps& caps = {});

struct DisjointPair {
    Mask a = 0;
    Mask b = 0;
};

/// First disjoint nonempty pair with mu(A u B) > mu(A) + mu(B), if any.
/// Exhaustive over all 3^n disjoint pairs.
std::optional<DisjointPair> subadditivity_violation(const MonotoneMeasure& m);

inline bool is_subadditive(const MonotoneMeasure& m) {
    return !subadditivity_violation(m).has_value();
}

/// mu(A u B) = mu(A) + mu(B) for all disjoint pairs; equivalently every
/// value is the sum of its singletons.
bool is_additive(const MonotoneMeasure& m);

enum class MeasureKind { General, Subadditive, Additive };

/// Deterministic per seed. General: random subset values repaired monotone
/// by max over subsets. Subadditive: mu(A) = min(cap, sum of weights), which
/// is monotone and sub-additive by construction. Additive: plain weight sums.
MonotoneMeasure random_measure(GroundSet ground, std::uint64_t seed, MeasureKind kind);

class SplitMix64;
/// Same, drawing from a caller-owned stream (used by the law suites).
MonotoneMeasure random_measure(GroundSet ground, SplitMix64& rng, MeasureKind kind);

}  // namespace nonlin
