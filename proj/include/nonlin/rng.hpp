#pragma once

#include <cstdint>

#include "nonlin/rational.hpp"

namespace nonlin {

/// SplitMix64. Chosen over <random> engines + distributions because the
/// byte-identical-reports contract requires the draw sequence to be stable
/// across standard libraries, and std distributions are not specified.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound >= 1. Rejection-free modulo is fine for
    /// the tiny bounds used here; determinism matters, perfect uniformity
    /// does not.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// Random rational num/den with num in [min_num, max_num], den in [1, max_den].
/// Small magnitudes on purpose: ties and degeneracies are what exercise the
/// solvers.
Rational random_rational(SplitMix64& rng, long min_num, long max_num, long max_den);

}  // namespace nonlin
