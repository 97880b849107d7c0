#include "nonlin/integral.hpp"

#include <string>
#include <vector>

namespace nonlin {

namespace {

void check_shapes(const MonotoneMeasure& m, const MeasurableFn& f) {
    if (f.points() != m.ground.n) {
        throw ValidationError(ValidationError::Kind::BadShape,
                              "function has " + std::to_string(f.points()) +
                                  " values, ground set has " + std::to_string(m.ground.n));
    }
}

}  // namespace

IntegralResult partition_integral(const MonotoneMeasure& m, const MeasurableFn& f,
                                  CoeffSign sign, Direction direction, const SizeCaps& caps) {
    check_shapes(m, f);
    const int n = m.ground.n;
    if (n > caps.partition_dp) {
        throw CapError("partition DP cap exceeded: n=" + std::to_string(n) + " > " +
                       std::to_string(caps.partition_dp));
    }
    const bool lower = direction == Direction::Lower;
    if (lower && sign == CoeffSign::NonNegative && !is_nonnegative(f)) {
        // every partition block containing a point with f < 0 would need a
        // coefficient that is both >= 0 and <= f at that point
        return IntegralResult{IntegralStatus::Infeasible, Rational(0), {}};
    }

    const Mask full = m.ground.full();

    // block extremum of f per nonempty mask, then the optimal coefficient
    std::vector<Rational> coeff(full + 1, Rational(0));
    for (Mask a = 1; a <= full; ++a) {
        const int low = lowest_point(a);
        const Mask rest = a & (a - 1);
        if (rest == 0) {
            coeff[a] = f.at(low);
        } else {
            const Rational& prev = coeff[rest];
            if (lower) {
                coeff[a] = f.at(low) < prev ? f.at(low) : prev;  // block min
            } else {
                coeff[a] = f.at(low) > prev ? f.at(low) : prev;  // block max
            }
        }
    }
    if (!lower && sign == CoeffSign::NonNegative) {
        for (Mask a = 1; a <= full; ++a) {
            if (coeff[a] < 0) coeff[a] = 0;
        }
    }

    std::vector<Rational> weight(full + 1, Rational(0));
    for (Mask a = 1; a <= full; ++a) weight[a] = coeff[a] * m.at(a);

    // best[S] = optimal total weight over partitions of S. The first block
    // of S always contains S's lowest point, which makes the recursion
    // single-counted and O(3^n) overall.
    std::vector<Rational> best(full + 1, Rational(0));
    std::vector<Mask> choice(full + 1, 0);
    for (Mask s = 1; s <= full; ++s) {
        const Mask low = s & (~s + 1);
        const Mask others = s ^ low;
        bool have = false;
        for (Mask u = others;; u = (u - 1) & others) {
            const Mask block = u | low;
            Rational cand = weight[block] + best[s ^ block];
            const bool better = !have || (lower ? cand > best[s] : cand < best[s]) ||
                                (cand == best[s] && block < choice[s]);
            if (better) {
                best[s] = std::move(cand);
                choice[s] = block;
                have = true;
            }
            if (u == 0) break;
        }
    }

    IntegralResult out;
    out.status = IntegralStatus::Value;
    out.value = best[full];
    for (Mask s = full; s != 0;) {
        const Mask block = choice[s];
        out.witness.pairs.push_back({coeff[block], block});
        s ^= block;
    }
    return out;
}

LinearProgram covering_lp(const MonotoneMeasure& m, const MeasurableFn& f, Direction direction) {
    const Mask full = m.ground.full();
    const int n = m.ground.n;
    const int vars = static_cast<int>(full);  // one per nonempty subset, index A-1

    LinearProgram lp;
    lp.sense = direction == Direction::Lower ? Sense::Maximize : Sense::Minimize;
    lp.num_vars = vars;
    lp.objective.resize(vars);
    for (Mask a = 1; a <= full; ++a) lp.objective[a - 1] = m.at(a);
    lp.rows.resize(n);
    for (int x = 0; x < n; ++x) {
        auto& row = lp.rows[x];
        row.coeffs.assign(vars, Rational(0));
        for (Mask a = 1; a <= full; ++a) {
            if (mask_contains(a, x)) row.coeffs[a - 1] = 1;
        }
        row.rel = direction == Direction::Lower ? Relation::Le : Relation::Ge;
        row.rhs = f.at(x);
    }
    return lp;
}

IntegralResult covering_integral(const MonotoneMeasure& m, const MeasurableFn& f,
                                 Direction direction, const SizeCaps& caps) {
    check_shapes(m, f);
    const int n = m.ground.n;
    if (n > caps.covering_lp) {
        throw CapError("covering LP cap exceeded: n=" + std::to_string(n) + " > " +
                       std::to_string(caps.covering_lp));
    }
    if (direction == Direction::Lower && !is_nonnegative(f)) {
        // non-negative coefficients cannot stay below f at a negative point
        return IntegralResult{IntegralStatus::Infeasible, Rational(0), {}};
    }

    const LpOutcome lp = solve(covering_lp(m, f, direction));
    if (lp.status != LpStatus::Optimal) {
        throw Error("covering LP unexpectedly " +
                    std::string(lp.status == LpStatus::Infeasible ? "infeasible" : "unbounded"));
    }

    IntegralResult out;
    out.status = IntegralStatus::Value;
    out.value = lp.value;
    const Mask full = m.ground.full();
    Mask covered = 0;
    for (Mask a = 1; a <= full; ++a) {
        const Rational& v = lp.solution[a - 1];
        if (v == 0) continue;
        out.witness.pairs.push_back({v, a});
        covered |= a;
    }
    if (covered != full) {
        // pad with a zero term so the witness is a covering; eval and
        // basic_sum are unchanged
        out.witness.pairs.push_back({Rational(0), full});
    }
    return out;
}

IntegralResult integrate(const MonotoneMeasure& m, const MeasurableFn& f, IntegralSpec spec,
                         const SizeCaps& caps) {
    // countable families coincide with their finite twins on finite ground
    // sets; nothing to route
    if (spec.family.structure == SetStructure::Covering) {
        if (spec.family.sign == CoeffSign::Signed) {
            return IntegralResult{IntegralStatus::Unsupported, Rational(0), {}};
        }
        return covering_integral(m, f, spec.direction, caps);
    }
    return partition_integral(m, f, spec.family.sign, spec.direction, caps);
}

namespace {

struct PartitionScan {
    const MonotoneMeasure& m;
    const MeasurableFn& f;
    CoeffSign sign;
    Direction direction;
    bool have = false;
    Rational best{};

    void consider(const std::vector<Mask>& blocks) {
        Rational total = 0;
        for (Mask block : blocks) {
            // extremum by direct point scan, independent of the DP tables
            Rational ext;
            bool first = true;
            for (int x = 0; x < f.points(); ++x) {
                if (!mask_contains(block, x)) continue;
                if (first) {
                    ext = f.at(x);
                    first = false;
                } else if (direction == Direction::Lower ? f.at(x) < ext : f.at(x) > ext) {
                    ext = f.at(x);
                }
            }
            if (direction == Direction::Upper && sign == CoeffSign::NonNegative && ext < 0) {
                ext = 0;
            }
            total += ext * m.at(block);
        }
        if (!have || (direction == Direction::Lower ? total > best : total < best)) {
            best = std::move(total);
            have = true;
        }
    }

    void enumerate(int point, std::vector<Mask>& blocks) {
        if (point == f.points()) {
            consider(blocks);
            return;
        }
        const Mask bit = Mask{1} << point;
        // index-based: the recursion grows and shrinks the vector, which
        // would invalidate references held by a range-for
        const std::size_t count = blocks.size();
        for (std::size_t i = 0; i < count; ++i) {
            blocks[i] |= bit;
            enumerate(point + 1, blocks);
            blocks[i] &= ~bit;
        }
        blocks.push_back(bit);
        enumerate(point + 1, blocks);
        blocks.pop_back();
    }
};

}  // namespace

std::optional<Rational> brute_force_partition_oracle(const MonotoneMeasure& m,
                                                     const MeasurableFn& f, CoeffSign sign,
                                                     Direction direction, const SizeCaps& caps) {
    check_shapes(m, f);
    if (m.ground.n > caps.partition_oracle) {
        throw CapError("partition oracle cap exceeded: n=" + std::to_string(m.ground.n) + " > " +
                       std::to_string(caps.partition_oracle));
    }
    if (direction == Direction::Lower && sign == CoeffSign::NonNegative && !is_nonnegative(f)) {
        return std::nullopt;
    }
    PartitionScan scan{m, f, sign, direction};
    std::vector<Mask> blocks;
    scan.enumerate(0, blocks);
    return scan.best;
}

}  // namespace nonlin
