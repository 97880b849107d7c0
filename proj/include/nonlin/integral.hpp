#pragma once

#include <optional>

#include "nonlin/exact_lp.hpp"
#include "nonlin/measure.hpp"
#include "nonlin/simple_function.hpp"

namespace nonlin {

enum class Direction { Lower, Upper };

/// Which integral to compute: family E and approximation direction.
/// Lower is sup{mu(phi) : phi in L(E,f)}, Upper is inf{mu(phi) : phi in
/// U(E,f)}. The classical names map to (family, direction) pairs:
/// pan = (P+, lower), sd = (C+, lower), concave = (P+, upper),
/// convex = (C+, upper). The literature is not unanimous about these labels
/// (Lehrer's concave integral is often defined as the covering supremum,
/// i.e. (C+, lower)); they are treated purely as labels here and nothing
/// dispatches on them.
struct IntegralSpec {
    FamilyTag family;
    Direction direction = Direction::Lower;
};

enum class IntegralStatus { Value, Infeasible, Unbounded, Unsupported };

/// Exact optimum plus an optimal witness. On a finite ground set the sup/inf
/// are attained (finitely many partitions; LP optimum at a vertex), so every
/// Value result carries a simple function in the requested family whose
/// basic sum equals the value and which lies below (Lower) or above (Upper)
/// the integrand.
struct IntegralResult {
    IntegralStatus status = IntegralStatus::Value;
    Rational value;
    SimpleFunction witness;

    bool has_value() const { return status == IntegralStatus::Value; }
};

/// Computes the decomposition integral for any admissible family. Signed
/// covering families (C+-, C+-mu) are refused with Unsupported: the
/// corresponding sup/inf degenerate and no integral is defined for them.
/// Countable families are routed to their finite twins (they coincide on a
/// finite ground set). Throws CapError when n exceeds the configured caps,
/// ValidationError when shapes disagree.
IntegralResult integrate(const MonotoneMeasure& m, const MeasurableFn& f, IntegralSpec spec,
                         const SizeCaps& caps = {});

/// Partition-family integrals via subset DP over block weights, O(3^n).
/// For a fixed partition the optimal coefficient of a block is its extremum
/// of f: the block minimum for Lower, the block maximum for Upper (clamped
/// at 0 for the non-negative family). Lower over the non-negative family
/// requires f >= 0; otherwise L(E, f) is empty and the result is Infeasible.
/// Witness blocks are the lexicographically smallest optimal decomposition.
IntegralResult partition_integral(const MonotoneMeasure& m, const MeasurableFn& f,
                                  CoeffSign sign, Direction direction,
                                  const SizeCaps& caps = {});

/// Non-negative covering-family integrals as exact LPs over one variable per
/// nonempty subset: maximize (Lower) or minimize (Upper) sum a_A mu(A)
/// subject to the pointwise constraint at every ground point. Lower requires
/// f >= 0 (else Infeasible).
IntegralResult covering_integral(const MonotoneMeasure& m, const MeasurableFn& f,
                                 Direction direction, const SizeCaps& caps = {});

/// Independent oracle: enumerates every set partition explicitly (no subset
/// DP, no shared extremum tables) and applies the same block-extremum
/// coefficient rule. nullopt encodes Infeasible. Capped at Bell-enumerable
/// sizes (n <= caps.partition_oracle); throws CapError beyond.
std::optional<Rational> brute_force_partition_oracle(const MonotoneMeasure& m,
                                                     const MeasurableFn& f, CoeffSign sign,
                                                     Direction direction,
                                                     const SizeCaps& caps = {});

/// The LP behind covering_integral, exposed so the basis-enumeration oracle
/// can cross-check the simplex on identical data.
LinearProgram covering_lp(const MonotoneMeasure& m, const MeasurableFn& f, Direction direction);

}  // namespace nonlin
