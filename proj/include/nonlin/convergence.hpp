#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonlin/integral.hpp"
#include "nonlin/measure.hpp"
#include "nonlin/simple_function.hpp"

namespace nonlin {

/// A function sequence {f_n} for convergence experiments.
///   ScaledIncreasing:  f_n = (1 - r^n) f         (non-decreasing for f >= 0)
///   ShiftedDecreasing: f_n = f + r^n g, g >= 0   (non-increasing, limit f)
///   Explicit:          listed terms, optional explicit limit (default: last)
///   Example5:          the truncated counterexample family, see
///                      example5_instance
struct SequenceSpec {
    enum class Kind { ScaledIncreasing, ShiftedDecreasing, Explicit, Example5 };

    Kind kind = Kind::ScaledIncreasing;
    Rational ratio;  // r, required 0 < r < 1 for the scaled/shifted kinds
    MeasurableFn base;
    MeasurableFn shift;  // g for ShiftedDecreasing
    std::vector<MeasurableFn> explicit_terms;
    std::optional<MeasurableFn> explicit_limit;
    int truncation = 0;  // N for Example5
};

/// f_n (1-based). For Explicit, n beyond the list repeats the last term.
MeasurableFn sequence_term(const SequenceSpec& seq, int n);
MeasurableFn sequence_limit(const SequenceSpec& seq);
/// Largest meaningful n: the truncation for Example5, the list length for
/// Explicit, unbounded (returns requested) otherwise.
int sequence_length(const SequenceSpec& seq, int requested);

/// The truncated counterexample instance on n = N+1 points {0,...,N}:
/// mu(A) = 1 iff |A| > 1 and 0 in A, else 0; f_n(0) = 1 and f_n(k) = 1/n
/// for k >= 1 (n = 1..N); the limit function is chi_{{0}}. The covering
/// lower integral of every f_n is 1 while the integral of the limit is 0,
/// so the naive limit exchange fails on this family.
struct Example5Instance {
    MonotoneMeasure measure;
    std::vector<MeasurableFn> terms;
    MeasurableFn limit;
};
Example5Instance example5_instance(int truncation);

enum class ConvergenceVerdict { Converged, LimitExchangeFails };

struct HypothesisNote {
    enum class Status { Met, NotMet, Vacuous };
    std::string id;
    Status status = Status::Vacuous;
    std::string note;
};

struct ConvergenceReport {
    std::vector<std::pair<int, Rational>> rows;  // (n, integral of f_n)
    Rational limit_value;                        // integral of the limit
    ConvergenceVerdict verdict = ConvergenceVerdict::Converged;
    int converged_at = -1;  // first n of the trailing within-tolerance run
    std::vector<HypothesisNote> hypotheses;
};

/// Integrates every term and the limit, compares the tail against the
/// tolerance, and reports which convergence-theorem hypotheses the instance
/// satisfies. Single-instance lemma checks elsewhere are tolerance-free;
/// the tolerance exists here only because convergence statements are
/// asymptotic. Throws when a term's integral has no value (signed integrand
/// under a non-negative family, unsupported family, cap overflow).
ConvergenceReport run_convergence(const MonotoneMeasure& m, const SequenceSpec& seq,
                                  IntegralSpec spec, int n_max, const Rational& tol,
                                  const SizeCaps& caps = {});

}  // namespace nonlin
