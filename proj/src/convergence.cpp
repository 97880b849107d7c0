#include "nonlin/convergence.hpp"

#include <algorithm>
#include <string>

namespace nonlin {

namespace {

Rational pow_rational(const Rational& r, int n) {
    Rational out(1);
    for (int i = 0; i < n; ++i) out *= r;
    return out;
}

void require_ratio(const SequenceSpec& seq) {
    if (!(seq.ratio > 0 && seq.ratio < 1)) {
        throw ValidationError(ValidationError::Kind::BadShape,
                              "sequence ratio must satisfy 0 < r < 1, got " +
                                  rat_string(seq.ratio));
    }
}

MeasurableFn example5_term(int truncation, int n) {
    MeasurableFn f{std::vector<Rational>(truncation + 1, rat(1, n))};
    f.values[0] = 1;
    return f;
}

}  // namespace

MeasurableFn sequence_term(const SequenceSpec& seq, int n) {
    switch (seq.kind) {
        case SequenceSpec::Kind::ScaledIncreasing: {
            require_ratio(seq);
            return scale(1 - pow_rational(seq.ratio, n), seq.base);
        }
        case SequenceSpec::Kind::ShiftedDecreasing: {
            require_ratio(seq);
            return add(seq.base, scale(pow_rational(seq.ratio, n), seq.shift));
        }
        case SequenceSpec::Kind::Explicit: {
            if (seq.explicit_terms.empty()) {
                throw ValidationError(ValidationError::Kind::BadShape,
                                      "explicit sequence has no terms");
            }
            const std::size_t idx =
                std::min<std::size_t>(static_cast<std::size_t>(n), seq.explicit_terms.size());
            return seq.explicit_terms[idx - 1];
        }
        case SequenceSpec::Kind::Example5:
            return example5_term(seq.truncation, n);
    }
    throw Error("unreachable sequence kind");
}

MeasurableFn sequence_limit(const SequenceSpec& seq) {
    switch (seq.kind) {
        case SequenceSpec::Kind::ScaledIncreasing:
        case SequenceSpec::Kind::ShiftedDecreasing:
            return seq.base;
        case SequenceSpec::Kind::Explicit:
            if (seq.explicit_limit) return *seq.explicit_limit;
            if (seq.explicit_terms.empty()) {
                throw ValidationError(ValidationError::Kind::BadShape,
                                      "explicit sequence has no terms");
            }
            return seq.explicit_terms.back();
        case SequenceSpec::Kind::Example5: {
            MeasurableFn limit{std::vector<Rational>(seq.truncation + 1, Rational(0))};
            limit.values[0] = 1;
            return limit;
        }
    }
    throw Error("unreachable sequence kind");
}

int sequence_length(const SequenceSpec& seq, int requested) {
    switch (seq.kind) {
        case SequenceSpec::Kind::Example5:
            return std::min(requested, seq.truncation);
        case SequenceSpec::Kind::Explicit:
            return std::min<int>(requested, static_cast<int>(seq.explicit_terms.size()));
        default:
            return requested;
    }
}

Example5Instance example5_instance(int truncation) {
    if (truncation < 1) {
        throw ValidationError(ValidationError::Kind::BadShape,
                              "example5 truncation must be >= 1, got " +
                                  std::to_string(truncation));
    }
    GroundSet ground(truncation + 1);
    std::vector<Rational> mu(ground.subset_count(), Rational(0));
    for (Mask a = 1; a <= ground.full(); ++a) {
        if (mask_contains(a, 0) && mask_size(a) > 1) mu[a] = 1;
    }
    Example5Instance inst{make_measure(ground, std::move(mu)), {}, MeasurableFn{}};
    for (int n = 1; n <= truncation; ++n) inst.terms.push_back(example5_term(truncation, n));
    SequenceSpec seq;
    seq.kind = SequenceSpec::Kind::Example5;
    seq.truncation = truncation;
    inst.limit = sequence_limit(seq);
    return inst;
}

namespace {

Rational abs_rational(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace

ConvergenceReport run_convergence(const MonotoneMeasure& m, const SequenceSpec& seq,
                                  IntegralSpec spec, int n_max, const Rational& tol,
                                  const SizeCaps& caps) {
    if (n_max < 1) {
        throw ValidationError(ValidationError::Kind::BadShape, "n_max must be >= 1");
    }
    const int steps = sequence_length(seq, n_max);

    ConvergenceReport report;
    std::vector<MeasurableFn> terms;
    terms.reserve(steps);
    for (int n = 1; n <= steps; ++n) {
        terms.push_back(sequence_term(seq, n));
        IntegralResult r = integrate(m, terms.back(), spec, caps);
        if (!r.has_value()) {
            throw Error("integral of f_" + std::to_string(n) + " has no value (status " +
                        std::to_string(static_cast<int>(r.status)) + ")");
        }
        report.rows.emplace_back(n, std::move(r.value));
    }

    const MeasurableFn limit = sequence_limit(seq);
    {
        IntegralResult r = integrate(m, limit, spec, caps);
        if (!r.has_value()) throw Error("integral of the limit function has no value");
        report.limit_value = std::move(r.value);
    }

    // trailing run of rows within tolerance of the limit value
    int run_start = -1;
    for (int i = static_cast<int>(report.rows.size()) - 1; i >= 0; --i) {
        if (abs_rational(report.rows[i].second - report.limit_value) <= tol) {
            run_start = report.rows[i].first;
        } else {
            break;
        }
    }
    report.converged_at = run_start;
    report.verdict = run_start >= 0 ? ConvergenceVerdict::Converged
                                    : ConvergenceVerdict::LimitExchangeFails;

    // hypothesis bookkeeping for the applicable convergence theorems
    using Status = HypothesisNote::Status;

    bool nondecreasing = true;
    bool nonincreasing = true;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!pointwise_leq(terms[i - 1], terms[i])) nondecreasing = false;
        if (!pointwise_leq(terms[i], terms[i - 1])) nonincreasing = false;
    }
    std::string dir_note = nondecreasing && nonincreasing ? "constant"
                           : nondecreasing                ? "non-decreasing"
                           : nonincreasing                ? "non-increasing"
                                                          : "not monotone";
    report.hypotheses.push_back({"sequence-monotone",
                                 nondecreasing || nonincreasing ? Status::Met : Status::NotMet,
                                 dir_note});

    if (spec.family.sign == CoeffSign::NonNegative) {
        bool nonneg = is_nonnegative(limit);
        for (const auto& t : terms) nonneg = nonneg && is_nonnegative(t);
        report.hypotheses.push_back({"nonnegative-terms", nonneg ? Status::Met : Status::NotMet,
                                     nonneg ? "all terms and the limit are >= 0"
                                            : "some term or the limit is negative somewhere"});
    }

    if (spec.direction == Direction::Lower && nonincreasing) {
        auto violation = subadditivity_violation(m);
        report.hypotheses.push_back(
            {"subadditive-measure", violation ? Status::NotMet : Status::Met,
             violation ? "sub-additivity fails at " + set_string(violation->a) + ", " +
                             set_string(violation->b)
                       : "measure is sub-additive"});
    }

    if (spec.family.structure == SetStructure::Covering && spec.direction == Direction::Lower &&
        !terms.empty()) {
        Rational inf = terms[0].at(0);
        for (const auto& t : terms) {
            for (const auto& v : t.values) {
                if (v < inf) inf = v;
            }
        }
        report.hypotheses.push_back(
            {"inf-positive", inf > 0 ? Status::Met : Status::NotMet,
             "inf over emitted terms = " + rat_string(inf) +
                 (seq.kind == SequenceSpec::Kind::Example5 ? " (prefix only)" : "")});
    }

    report.hypotheses.push_back(
        {"continuity-finiteness", Status::Vacuous,
         "continuity from above/below and finiteness are automatic on a finite ground set"});

    if (seq.kind == SequenceSpec::Kind::Example5) {
        report.hypotheses.push_back(
            {"truncation-order-of-limits", Status::Vacuous,
             "the limit row uses the n->infinity limit function; the emitted prefix stops at the "
             "truncation, so uniform-band arguments do not apply to it"});
    }

    return report;
}

}  // namespace nonlin
