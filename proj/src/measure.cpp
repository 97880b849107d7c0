#include "nonlin/measure.hpp"

#include <utility>

#include "nonlin/rng.hpp"

namespace nonlin {

MonotoneMeasure make_measure(GroundSet ground, std::vector<Rational> values,
                             const SizeCaps& caps) {
    if (ground.n > caps.ground) {
        throw CapError("ground set size " + std::to_string(ground.n) +
                       " exceeds the measure cap " + std::to_string(caps.ground));
    }
    if (values.size() != ground.subset_count()) {
        throw ValidationError(ValidationError::Kind::BadShape,
                              "measure needs " + std::to_string(ground.subset_count()) +
                                  " values for n=" + std::to_string(ground.n) + ", got " +
                                  std::to_string(values.size()));
    }
    if (values[0] != 0) {
        throw ValidationError(ValidationError::Kind::NonZeroEmpty,
                              "mu({}) must be 0, got " + rat_string(values[0]));
    }
    for (Mask a = 0; a < values.size(); ++a) {
        if (values[a] < 0) {
            throw ValidationError(ValidationError::Kind::NegativeValue,
                                  "mu(" + set_string(a) + ") = " + rat_string(values[a]) +
                                      " is negative");
        }
    }
    // cover-relation scan: A vs A + {x}; transitivity gives the full order
    for (Mask a = 0; a < values.size(); ++a) {
        for (int x = 0; x < ground.n; ++x) {
            if (mask_contains(a, x)) continue;
            Mask b = a | (Mask{1} << x);
            if (values[a] > values[b]) {
                ValidationError err(ValidationError::Kind::NonMonotone,
                                    "not monotone: mu(" + set_string(a) + ") = " +
                                        rat_string(values[a]) + " > mu(" + set_string(b) +
                                        ") = " + rat_string(values[b]));
                err.subset = a;
                err.superset = b;
                throw err;
            }
        }
    }
    return MonotoneMeasure{ground, std::move(values)};
}

std::optional<DisjointPair> subadditivity_violation(const MonotoneMeasure& m) {
    const Mask full = m.ground.full();
    for (Mask a = 1; a <= full; ++a) {
        const Mask rest = full & ~a;
        if (rest == 0) continue;
        // nonempty submasks of the complement, ascending, so the reported
        // pair is the lexicographically first violation
        for (Mask b = (0 - rest) & rest; b != 0; b = (b - rest) & rest) {
            if (m.at(a | b) > m.at(a) + m.at(b)) {
                return DisjointPair{a, b};
            }
        }
    }
    return std::nullopt;
}

bool is_additive(const MonotoneMeasure& m) {
    const Mask full = m.ground.full();
    for (Mask a = 1; a <= full; ++a) {
        Rational sum = 0;
        for (int x = 0; x < m.ground.n; ++x) {
            if (mask_contains(a, x)) sum += m.at(Mask{1} << x);
        }
        if (m.at(a) != sum) return false;
    }
    return true;
}

MonotoneMeasure random_measure(GroundSet ground, SplitMix64& rng, MeasureKind kind) {
    const std::size_t count = ground.subset_count();
    std::vector<Rational> values(count, Rational(0));

    switch (kind) {
        case MeasureKind::General: {
            // raw nonnegative draws, then monotone repair by max over subsets
            std::vector<Rational> raw(count, Rational(0));
            for (Mask a = 1; a < count; ++a) raw[a] = random_rational(rng, 0, 16, 8);
            for (Mask a = 1; a < count; ++a) {
                values[a] = raw[a];
                for (int x = 0; x < ground.n; ++x) {
                    if (!mask_contains(a, x)) continue;
                    Mask sub = a & ~(Mask{1} << x);
                    if (values[sub] > values[a]) values[a] = values[sub];
                }
            }
            break;
        }
        case MeasureKind::Subadditive: {
            std::vector<Rational> weights(ground.n);
            for (auto& w : weights) w = random_rational(rng, 1, 16, 8);
            Rational cap = random_rational(rng, 1, 16, 4);
            for (Mask a = 1; a < count; ++a) {
                Rational sum = 0;
                for (int x = 0; x < ground.n; ++x) {
                    if (mask_contains(a, x)) sum += weights[x];
                }
                values[a] = sum < cap ? sum : cap;
            }
            break;
        }
        case MeasureKind::Additive: {
            std::vector<Rational> weights(ground.n);
            for (auto& w : weights) w = random_rational(rng, 1, 16, 8);
            for (Mask a = 1; a < count; ++a) {
                Rational sum = 0;
                for (int x = 0; x < ground.n; ++x) {
                    if (mask_contains(a, x)) sum += weights[x];
                }
                values[a] = sum;
            }
            break;
        }
    }

    return make_measure(ground, std::move(values));
}

MonotoneMeasure random_measure(GroundSet ground, std::uint64_t seed, MeasureKind kind) {
    SplitMix64 rng(seed);
    return random_measure(ground, rng, kind);
}

}  // namespace nonlin
