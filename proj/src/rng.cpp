#include "nonlin/rng.hpp"

namespace nonlin {

Rational random_rational(SplitMix64& rng, long min_num, long max_num, long max_den) {
    long num = rng.range(min_num, max_num);
    long den = rng.range(1, max_den);
    return rat(num, den);
}

}  // namespace nonlin
