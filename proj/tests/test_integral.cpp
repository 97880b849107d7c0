#include <doctest.h>

#include <algorithm>

#include "nonlin/integral.hpp"
#include "nonlin/rng.hpp"

using namespace nonlin;

namespace {

MonotoneMeasure measure2(long m0, long m1, long m2, long m3) {
    return make_measure(GroundSet(2),
                        {Rational(m0), Rational(m1), Rational(m2), Rational(m3)});
}

MeasurableFn fn(std::initializer_list<long> values) {
    MeasurableFn f;
    for (long v : values) f.values.emplace_back(v);
    return f;
}

MonotoneMeasure example5_measure(int truncation) {
    GroundSet g(truncation + 1);
    std::vector<Rational> mu(g.subset_count(), Rational(0));
    for (Mask a = 1; a <= g.full(); ++a) {
        if (mask_contains(a, 0) && mask_size(a) > 1) mu[a] = 1;
    }
    return make_measure(g, mu);
}

// the integrand shape every witness must satisfy
void check_witness(const MonotoneMeasure& m, const MeasurableFn& f, IntegralSpec spec,
                   const IntegralResult& r) {
    REQUIRE(r.has_value());
    CHECK(classify_contains(r.witness, m.ground, spec.family));
    CHECK(basic_sum(m, r.witness) == r.value);
    if (spec.direction == Direction::Lower) {
        CHECK(below(r.witness, f));
    } else {
        CHECK(above(r.witness, f));
    }
}

MeasurableFn random_fn(SplitMix64& rng, int n, bool nonneg) {
    MeasurableFn f;
    for (int i = 0; i < n; ++i) {
        f.values.push_back(nonneg ? random_rational(rng, 0, 12, 6)
                                  : random_rational(rng, -8, 8, 6));
    }
    return f;
}

}  // namespace

TEST_SUITE_BEGIN("integral");

TEST_CASE("I1: lower partition integral beats the coarse decomposition") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    IntegralSpec spec{families::p_plus, Direction::Lower};
    IntegralResult r = integrate(m, fn({1, 1}), spec);
    REQUIRE(r.has_value());
    CHECK(r.value == 2);
    REQUIRE(r.witness.pairs.size() == 2);  // singleton partition, coefficients (1,1)
    CHECK(r.witness.pairs[0].coeff == 1);
    CHECK(r.witness.pairs[0].set == 0b01u);
    CHECK(r.witness.pairs[1].coeff == 1);
    CHECK(r.witness.pairs[1].set == 0b10u);
    check_witness(m, fn({1, 1}), spec, r);
}

TEST_CASE("I1: upper covering integral uses the whole set") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    IntegralSpec spec{families::c_plus, Direction::Upper};
    IntegralResult r = integrate(m, fn({1, 1}), spec);
    REQUIRE(r.has_value());
    CHECK(r.value == 1);
    REQUIRE(r.witness.pairs.size() == 1);
    CHECK(r.witness.pairs[0].coeff == 1);
    CHECK(r.witness.pairs[0].set == 0b11u);
    check_witness(m, fn({1, 1}), spec, r);
}

TEST_CASE("I2: upper partition integral rides the null singletons") {
    MonotoneMeasure m = measure2(0, 0, 0, 1);
    IntegralSpec spec{families::p_plus, Direction::Upper};
    IntegralResult r = integrate(m, fn({1, 2}), spec);
    REQUIRE(r.has_value());
    CHECK(r.value == 0);
    REQUIRE(r.witness.pairs.size() == 2);
    CHECK(r.witness.pairs[0].coeff == 1);
    CHECK(r.witness.pairs[1].coeff == 2);
    check_witness(m, fn({1, 2}), spec, r);
}

TEST_CASE("I2: lower integrals") {
    MonotoneMeasure m = measure2(0, 0, 0, 1);
    IntegralResult p = integrate(m, fn({1, 2}), {families::p_plus, Direction::Lower});
    CHECK(p.value == 1);  // partition {X} with coefficient min(1,2)=1
    IntegralResult c = integrate(m, fn({1, 2}), {families::c_plus, Direction::Lower});
    CHECK(c.value == 1);  // a_X = 1, the constraint at point 0 binds
    check_witness(m, fn({1, 2}), {families::c_plus, Direction::Lower}, c);
}

TEST_CASE("I2: upper covering integral is zero via null singletons") {
    MonotoneMeasure m = measure2(0, 0, 0, 1);
    IntegralSpec spec{families::c_plus, Direction::Upper};
    IntegralResult r = integrate(m, fn({1, 2}), spec);
    REQUIRE(r.has_value());
    CHECK(r.value == 0);
    check_witness(m, fn({1, 2}), spec, r);
}

TEST_CASE("zero integrand gives zero under every supported spec") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    for (FamilyTag tag : families::all) {
        for (Direction dir : {Direction::Lower, Direction::Upper}) {
            IntegralResult r = integrate(m, fn({0, 0}), {tag, dir});
            if (tag.structure == SetStructure::Covering && tag.sign == CoeffSign::Signed) {
                CHECK(r.status == IntegralStatus::Unsupported);
            } else {
                REQUIRE(r.has_value());
                CHECK(r.value == 0);
                check_witness(m, fn({0, 0}), {tag, dir}, r);
            }
        }
    }
}

TEST_CASE("signed covering families are refused") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    CHECK(integrate(m, fn({1, 1}), {families::c_signed, Direction::Lower}).status ==
          IntegralStatus::Unsupported);
    CHECK(integrate(m, fn({1, 1}), {families::c_signed_mu, Direction::Upper}).status ==
          IntegralStatus::Unsupported);
}

TEST_CASE("negative values make the non-negative lower families infeasible") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    CHECK(integrate(m, fn({-1, 1}), {families::p_plus, Direction::Lower}).status ==
          IntegralStatus::Infeasible);
    CHECK(integrate(m, fn({-1, 1}), {families::c_plus, Direction::Lower}).status ==
          IntegralStatus::Infeasible);
    // the signed partition family handles the same integrand
    IntegralResult r = integrate(m, fn({-1, 1}), {families::p_signed, Direction::Lower});
    REQUIRE(r.has_value());
    CHECK(r.value == 0);  // blocks {0},{1} with coefficients (-1, 1)
    REQUIRE(r.witness.pairs.size() == 2);
    CHECK(r.witness.pairs[0].coeff == -1);
    CHECK(r.witness.pairs[1].coeff == 1);
}

TEST_CASE("countable tags route to their finite twins") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    for (Direction dir : {Direction::Lower, Direction::Upper}) {
        IntegralResult fin = integrate(m, fn({1, 3}), {families::p_plus, dir});
        IntegralResult inf = integrate(m, fn({1, 3}), {families::p_plus_mu, dir});
        CHECK(fin.value == inf.value);
        CHECK(classify_contains(inf.witness, m.ground, families::p_plus_mu));
    }
}

TEST_CASE("truncated counterexample: lower integrals of the limit function vanish") {
    MonotoneMeasure m = example5_measure(2);
    MeasurableFn chi0 = indicator_fn(m.ground, 0b001);
    CHECK(integrate(m, chi0, {families::p_plus, Direction::Lower}).value == 0);
    CHECK(integrate(m, chi0, {families::c_plus, Direction::Lower}).value == 0);
    auto oracle =
        brute_force_partition_oracle(m, chi0, CoeffSign::NonNegative, Direction::Lower);
    CHECK(*oracle == 0);
}

TEST_CASE("truncated counterexample: every f_n integrates to 1 over coverings") {
    for (int truncation : {1, 3}) {
        MonotoneMeasure m = example5_measure(truncation);
        for (int n = 1; n <= truncation; ++n) {
            MeasurableFn f{std::vector<Rational>(truncation + 1, rat(1, n))};
            f.values[0] = 1;
            IntegralSpec spec{families::c_plus, Direction::Lower};
            IntegralResult r = integrate(m, f, spec);
            CHECK(r.value == 1);
            check_witness(m, f, spec, r);
        }
    }
}

TEST_CASE("single-point ground set") {
    MonotoneMeasure m = make_measure(GroundSet(1), {Rational(0), rat(5, 3)});
    MeasurableFn f{{rat(7, 2)}};
    for (FamilyTag tag :
         {families::p_plus, families::p_signed, families::p_plus_mu, families::c_plus}) {
        for (Direction dir : {Direction::Lower, Direction::Upper}) {
            CHECK(integrate(m, f, {tag, dir}).value == rat(5, 3) * rat(7, 2));
        }
    }
    CHECK(*brute_force_partition_oracle(m, f, CoeffSign::NonNegative, Direction::Lower) ==
          rat(5, 3) * rat(7, 2));
}

TEST_CASE("size caps throw") {
    SplitMix64 rng(5);
    SizeCaps caps;
    caps.partition_dp = 2;
    caps.covering_lp = 2;
    MonotoneMeasure m = random_measure(GroundSet(3), 5, MeasureKind::General);
    MeasurableFn f = random_fn(rng, 3, true);
    CHECK_THROWS_AS(partition_integral(m, f, CoeffSign::NonNegative, Direction::Lower, caps),
                    CapError);
    CHECK_THROWS_AS(covering_integral(m, f, Direction::Lower, caps), CapError);
    MonotoneMeasure m6 = random_measure(GroundSet(6), 5, MeasureKind::General);
    CHECK_THROWS_AS(brute_force_partition_oracle(m6, random_fn(rng, 6, true),
                                                 CoeffSign::NonNegative, Direction::Lower),
                    CapError);
}

TEST_CASE("shape mismatch is rejected") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    CHECK_THROWS_AS(integrate(m, fn({1}), {families::p_plus, Direction::Lower}),
                    ValidationError);
}

TEST_CASE("partition DP equals the brute-force oracle") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(rng.range(1, 5));
        const MeasureKind kind = static_cast<MeasureKind>(rng.below(3));
        MonotoneMeasure m = random_measure(GroundSet(n), rng, kind);
        for (CoeffSign sign : {CoeffSign::NonNegative, CoeffSign::Signed}) {
            MeasurableFn f = random_fn(rng, n, sign == CoeffSign::NonNegative);
            for (Direction dir : {Direction::Lower, Direction::Upper}) {
                IntegralResult got = partition_integral(m, f, sign, dir);
                auto want = brute_force_partition_oracle(m, f, sign, dir);
                REQUIRE(want.has_value());
                CHECK(got.value == *want);
                check_witness(m, f, {{SetStructure::Partition, sign, TermCount::Finite}, dir},
                              got);
            }
        }
    }
}

TEST_CASE("the oracle agrees on infeasibility") {
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    auto v = brute_force_partition_oracle(m, fn({-1, 1}), CoeffSign::NonNegative,
                                          Direction::Lower);
    CHECK(!v.has_value());
}

TEST_CASE("oracle values on the named instances") {
    CHECK(*brute_force_partition_oracle(measure2(0, 1, 1, 1), fn({1, 1}),
                                        CoeffSign::NonNegative, Direction::Lower) == 2);
    CHECK(*brute_force_partition_oracle(measure2(0, 0, 0, 1), fn({1, 2}),
                                        CoeffSign::NonNegative, Direction::Upper) == 0);
}

TEST_CASE("covering LP equals the basis-enumeration optimum") {
    SplitMix64 rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.range(2, 3));
        const MeasureKind kind = static_cast<MeasureKind>(rng.below(3));
        MonotoneMeasure m = random_measure(GroundSet(n), rng, kind);
        MeasurableFn f = random_fn(rng, n, true);
        for (Direction dir : {Direction::Lower, Direction::Upper}) {
            const LinearProgram lp = covering_lp(m, f, dir);
            const LpOutcome got = solve(lp);
            REQUIRE(got.status == LpStatus::Optimal);
            auto basics = enumerate_basic_solutions(lp);
            REQUIRE(!basics.empty());
            Rational best = basics.front().value;
            for (const auto& b : basics) {
                if (dir == Direction::Lower ? b.value > best : b.value < best) best = b.value;
            }
            CHECK(best == got.value);
        }
    }
}

TEST_CASE("instance I2's covering-lower LP has basis optimum 1") {
    MonotoneMeasure m = measure2(0, 0, 0, 1);
    auto basics = enumerate_basic_solutions(covering_lp(m, fn({1, 2}), Direction::Lower));
    REQUIRE(!basics.empty());
    Rational best = basics.front().value;
    for (const auto& b : basics) {
        if (b.value > best) best = b.value;
    }
    CHECK(best == 1);
}

TEST_CASE("monotonicity and homogeneity across supported specs") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.range(1, 4));
        MonotoneMeasure m = random_measure(GroundSet(n), rng, MeasureKind::General);
        MeasurableFn f = random_fn(rng, n, true);
        MeasurableFn g = add(f, random_fn(rng, n, true));
        Rational c = random_rational(rng, 1, 6, 3);
        for (FamilyTag tag : {families::p_plus, families::p_signed, families::c_plus}) {
            for (Direction dir : {Direction::Lower, Direction::Upper}) {
                IntegralResult rf = integrate(m, f, {tag, dir});
                IntegralResult rg = integrate(m, g, {tag, dir});
                CHECK(rf.value <= rg.value);
                IntegralResult rc = integrate(m, scale(c, f), {tag, dir});
                CHECK(rc.value == c * rf.value);
            }
        }
    }
}

TEST_CASE("family nesting for non-negative integrands") {
    SplitMix64 rng(6174);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.range(1, 4));
        MonotoneMeasure m = random_measure(GroundSet(n), rng, MeasureKind::General);
        MeasurableFn f = random_fn(rng, n, true);
        CHECK(integrate(m, f, {families::p_plus, Direction::Lower}).value <=
              integrate(m, f, {families::c_plus, Direction::Lower}).value);
        CHECK(integrate(m, f, {families::c_plus, Direction::Upper}).value <=
              integrate(m, f, {families::p_plus, Direction::Upper}).value);
    }
}

TEST_CASE("additive measures collapse every variant to the weighted sum") {
    SplitMix64 rng(8128);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.range(1, 4));
        MonotoneMeasure m = random_measure(GroundSet(n), rng, MeasureKind::Additive);
        MeasurableFn f = random_fn(rng, n, true);
        Rational expected = 0;
        for (int x = 0; x < n; ++x) expected += f.at(x) * m.at(Mask{1} << x);
        for (FamilyTag tag : {families::p_plus, families::c_plus}) {
            for (Direction dir : {Direction::Lower, Direction::Upper}) {
                CHECK(integrate(m, f, {tag, dir}).value == expected);
            }
        }
    }
}

TEST_CASE("upper covering integral routes mass through the cheap singleton") {
    // minimize a_{0} * 0 + a_{1} * 1 + a_X * 3 subject to covering (2,1)
    MonotoneMeasure m = measure2(0, 0, 1, 3);
    IntegralSpec spec{families::c_plus, Direction::Upper};
    IntegralResult r = integrate(m, fn({2, 1}), spec);
    REQUIRE(r.has_value());
    CHECK(r.value == 1);  // a_{0}=2 free, a_{1}=1; using X would cost 3
    check_witness(m, fn({2, 1}), spec, r);
}

TEST_CASE("ties between optimal decompositions pick the smallest block masks") {
    // additive measure, f = (1,1): the singleton partition and {X} both
    // score 2; the witness must be the lexicographically smaller one
    MonotoneMeasure m = measure2(0, 1, 1, 2);
    IntegralResult r = integrate(m, fn({1, 1}), {families::p_plus, Direction::Lower});
    CHECK(r.value == 2);
    REQUIRE(r.witness.pairs.size() == 2);
    CHECK(r.witness.pairs[0].set == 0b01u);
    CHECK(r.witness.pairs[1].set == 0b10u);
}

TEST_CASE("regression: the lower covering integral may exceed the upper one") {
    // sup-below <= inf-above is NOT an invariant for non-additive measures
    MonotoneMeasure m = measure2(0, 1, 1, 1);
    IntegralResult lo = integrate(m, fn({1, 1}), {families::c_plus, Direction::Lower});
    IntegralResult hi = integrate(m, fn({1, 1}), {families::c_plus, Direction::Upper});
    CHECK(lo.value == 2);
    CHECK(hi.value == 1);
    CHECK(lo.value > hi.value);
}

TEST_SUITE_END();
