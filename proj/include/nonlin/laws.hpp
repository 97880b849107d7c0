#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonlin/integral.hpp"
#include "nonlin/measure.hpp"
#include "nonlin/rng.hpp"
#include "nonlin/simple_function.hpp"

namespace nonlin {

enum class LawStatus { Holds, Violated, HypothesesNotMet };

/// One exact comparison inside a law verdict. lhs/rhs are canonical rational
/// strings; "-inf" encodes an empty lower feasible set.
struct LawCheck {
    std::string label;
    std::string relation;  // "<=", ">=", "=="
    std::string lhs;
    std::string rhs;
    bool holds = true;

    friend bool operator==(const LawCheck&, const LawCheck&) = default;
};

/// Everything a law check needs, in replayable form. Which fields are set
/// depends on the law id. enforce_hypotheses=false checks the conclusion
/// even when a measure-kind hypothesis (sub-additivity, additivity) fails;
/// that is how the falsifier searches for violations with hypotheses
/// deliberately dropped.
struct LawInstance {
    std::string law;
    std::optional<MonotoneMeasure> measure;
    std::optional<MeasurableFn> f;
    std::optional<MeasurableFn> g;
    std::optional<Rational> delta;
    std::optional<Rational> scalar;   // homogeneity c
    std::optional<Rational> coeff_a;  // pan linearity a
    std::optional<Rational> coeff_b;  // pan linearity b
    std::optional<Mask> restrict_set;
    std::optional<FamilyTag> family;
    std::optional<Direction> direction;
    int example5_truncation = 0;
    bool enforce_hypotheses = true;
};

struct LawReport {
    std::string law;
    LawInstance instance;
    LawStatus status = LawStatus::Holds;
    std::vector<LawCheck> checks;
    std::string note;
};

/// The stable law ids: monotonicity, homogeneity, delta_shift, restriction,
/// superadditivity, uniform_band, pan_linearity, pan_eq_concave, nesting,
/// additive_collapse, example5.
const std::vector<std::string>& law_ids();
bool is_known_law(const std::string& law);

/// Natural measure kind for a law's hypotheses (Subadditive for the pan
/// laws, Additive for additive_collapse, General otherwise).
MeasureKind default_measure_kind(const std::string& law);

/// Checks one law on one concrete instance. Pure and deterministic: the same
/// instance always yields the identical report.
LawReport check_law(const LawInstance& instance);

// typed entry points behind check_law

LawReport check_monotonicity(const MonotoneMeasure& m, const MeasurableFn& f,
                             const MeasurableFn& g, IntegralSpec spec);
LawReport check_homogeneity(const MonotoneMeasure& m, const MeasurableFn& f, const Rational& c,
                            IntegralSpec spec);
LawReport check_delta_shift(const MonotoneMeasure& m, const MeasurableFn& f,
                            const Rational& delta, FamilyTag family);
LawReport check_restriction(const MonotoneMeasure& m, const MeasurableFn& f, Mask a,
                            FamilyTag family);
/// Covering-family additivity bounds, asserted in their direction-consistent
/// forms: lower(f+g) >= lower(f) + lower(g) and upper(f+g) <= upper(f) +
/// upper(g). (The sup-side statement is sometimes printed with the two
/// sides' directions mixed; only the direction-consistent forms are checked
/// here.)
LawReport check_superadditivity(const MonotoneMeasure& m, const MeasurableFn& f,
                                const MeasurableFn& g, FamilyTag family);
LawReport check_uniform_band(const MonotoneMeasure& m, const MeasurableFn& f,
                             const Rational& delta, FamilyTag family);
LawReport check_pan_linearity(const MonotoneMeasure& m, const MeasurableFn& f,
                              const MeasurableFn& g, const Rational& a, const Rational& b,
                              FamilyTag family, bool enforce_hypotheses = true);
LawReport check_pan_eq_concave(const MonotoneMeasure& m, const MeasurableFn& f, FamilyTag family,
                               bool enforce_hypotheses = true);
LawReport check_nesting(const MonotoneMeasure& m, const MeasurableFn& f);
LawReport check_additive_collapse(const MonotoneMeasure& m, const MeasurableFn& f,
                                  bool enforce_hypotheses = true);
LawReport check_example5(int truncation);

/// Deterministic random instance for a law (one draw from the stream).
LawInstance random_law_instance(const std::string& law, SplitMix64& rng, int max_n,
                                MeasureKind kind, bool enforce_hypotheses);

struct LawSuiteConfig {
    std::string law;
    int trials = 1000;
    std::uint64_t seed = 42;
    int max_n = 5;
    std::optional<MeasureKind> measure_kind;  // default: the law's natural kind
    int example5_truncation = 6;
};

struct LawSuiteResult {
    LawSuiteConfig config;
    MeasureKind kind_used = MeasureKind::General;
    int holds = 0;
    int violated = 0;
    int hypotheses_not_met = 0;
    std::vector<LawReport> reports;
};

/// Runs `trials` random instances of the law. Passing a measure kind that
/// cannot guarantee the law's hypothesis switches the suite to
/// conclusion-only mode (hypotheses dropped), so genuine violations surface
/// as Violated instead of Hypotheses-Not-Met. example5 ignores trials and
/// runs the single deterministic reproduction.
LawSuiteResult run_law_suite(const LawSuiteConfig& config);

/// Random search for a violation. Hypotheses are dropped; the first
/// violating instance is re-checked (and, for partition-family equalities at
/// oracle size, re-computed against the brute-force partition oracle) before
/// being returned. nullopt when no violation is found within the budget.
std::optional<LawReport> falsify(const std::string& law, MeasureKind kind, int trials,
                                 std::uint64_t seed, int max_n = 5);

}  // namespace nonlin
