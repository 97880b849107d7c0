#include "nonlin/io.hpp"

#include <fstream>
#include <sstream>

namespace nonlin {

namespace {

[[noreturn]] void bad(std::string_view context, const std::string& why) {
    throw ParseError(std::string(context) + ": " + why);
}

const Json& field(const Json& j, const char* key, std::string_view context) {
    if (!j.is_object()) bad(context, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(context, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key, std::string_view context) {
    const Json& v = field(j, key, context);
    if (!v.is_number_integer()) bad(context, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return rat_string(r); }

Rational rational_from_json(const Json& j, std::string_view context) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) bad(context, "expected a rational string like \"3\" or \"1/2\"");
    std::string err;
    auto r = parse_rational(j.get<std::string>(), &err);
    if (!r) bad(context, err);
    return *r;
}

Json measure_to_json(const MonotoneMeasure& m) {
    Json j;
    j["n"] = m.ground.n;
    Json mu = Json::array();
    for (const auto& v : m.values) mu.push_back(rat_string(v));
    j["mu"] = std::move(mu);
    return j;
}

MonotoneMeasure measure_from_json(const Json& j, const SizeCaps& caps,
                                  std::string_view context) {
    const int n = int_field(j, "n", context);
    if (n < 1 || n > GroundSet::kMaxPoints) {
        bad(context, "n must be in [1, " + std::to_string(GroundSet::kMaxPoints) + "], got " +
                         std::to_string(n));
    }
    if (n > caps.ground) {
        bad(context,
            "n=" + std::to_string(n) + " exceeds the size cap " + std::to_string(caps.ground));
    }
    GroundSet ground(n);
    const Json& mu = field(j, "mu", context);
    if (!mu.is_array()) bad(context, "\"mu\" must be an array of rational strings");
    if (mu.size() != ground.subset_count()) {
        bad(context, "\"mu\" must have 2^n = " + std::to_string(ground.subset_count()) +
                         " entries, got " + std::to_string(mu.size()));
    }
    std::vector<Rational> values;
    values.reserve(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        values.push_back(
            rational_from_json(mu[i], std::string(context) + ".mu[" + std::to_string(i) + "]"));
    }
    try {
        return make_measure(ground, std::move(values), caps);
    } catch (const ValidationError& e) {
        bad(context, e.what());
    }
}

Json fn_to_json(const MeasurableFn& f) {
    Json j = Json::array();
    for (const auto& v : f.values) j.push_back(rat_string(v));
    return j;
}

MeasurableFn fn_from_json(const Json& j, int n, std::string_view context) {
    if (!j.is_array()) bad(context, "expected an array of rational strings");
    if (static_cast<int>(j.size()) != n) {
        bad(context, "expected " + std::to_string(n) + " values, got " + std::to_string(j.size()));
    }
    MeasurableFn f;
    f.values.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        f.values.push_back(
            rational_from_json(j[i], std::string(context) + "[" + std::to_string(i) + "]"));
    }
    return f;
}

Json simple_function_to_json(const SimpleFunction& phi) {
    Json j = Json::array();
    for (const auto& [coeff, set] : phi.pairs) {
        Json points = Json::array();
        for (int x = 0; set >> x; ++x) {
            if (mask_contains(set, x)) points.push_back(x);
        }
        j.push_back(Json::array({rat_string(coeff), std::move(points)}));
    }
    return j;
}

SimpleFunction simple_function_from_json(const Json& j, const GroundSet& ground,
                                         std::string_view context) {
    if (!j.is_array()) bad(context, "expected an array of [coefficient, points] pairs");
    SimpleFunction phi;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string ctx = std::string(context) + "[" + std::to_string(k) + "]";
        const Json& pair = j[k];
        if (!pair.is_array() || pair.size() != 2) bad(ctx, "expected [coefficient, points]");
        SimpleFunction::Pair p;
        p.coeff = rational_from_json(pair[0], ctx + ".coefficient");
        if (!pair[1].is_array()) bad(ctx, "points must be an array of indices");
        for (const Json& pt : pair[1]) {
            if (!pt.is_number_integer()) bad(ctx, "points must be integers");
            const int x = pt.get<int>();
            if (x < 0 || x >= ground.n) {
                bad(ctx, "point " + std::to_string(x) + " outside the ground set of size " +
                             std::to_string(ground.n));
            }
            p.set |= Mask{1} << x;
        }
        phi.pairs.push_back(std::move(p));
    }
    return phi;
}

namespace {

const char* sequence_kind_name(SequenceSpec::Kind kind) {
    switch (kind) {
        case SequenceSpec::Kind::ScaledIncreasing: return "scaled";
        case SequenceSpec::Kind::ShiftedDecreasing: return "shifted";
        case SequenceSpec::Kind::Explicit: return "explicit";
        case SequenceSpec::Kind::Example5: return "example5";
    }
    return "?";
}

}  // namespace

Json sequence_spec_to_json(const SequenceSpec& seq) {
    Json j;
    j["kind"] = sequence_kind_name(seq.kind);
    switch (seq.kind) {
        case SequenceSpec::Kind::ScaledIncreasing:
            j["r"] = rat_string(seq.ratio);
            break;
        case SequenceSpec::Kind::ShiftedDecreasing:
            j["r"] = rat_string(seq.ratio);
            j["g"] = fn_to_json(seq.shift);
            break;
        case SequenceSpec::Kind::Explicit: {
            Json terms = Json::array();
            for (const auto& t : seq.explicit_terms) terms.push_back(fn_to_json(t));
            j["terms"] = std::move(terms);
            if (seq.explicit_limit) j["limit"] = fn_to_json(*seq.explicit_limit);
            break;
        }
        case SequenceSpec::Kind::Example5:
            j["N"] = seq.truncation;
            break;
    }
    return j;
}

SequenceSpec sequence_spec_from_json(const Json& j, std::optional<MeasurableFn> base, int n,
                                     std::string_view context) {
    const Json& kind = field(j, "kind", context);
    if (!kind.is_string()) bad(context, "\"kind\" must be a string");
    const std::string name = kind.get<std::string>();

    SequenceSpec seq;
    if (name == "scaled" || name == "shifted") {
        seq.kind = name == "scaled" ? SequenceSpec::Kind::ScaledIncreasing
                                    : SequenceSpec::Kind::ShiftedDecreasing;
        seq.ratio = rational_from_json(field(j, "r", context), std::string(context) + ".r");
        if (!(seq.ratio > 0 && seq.ratio < 1)) bad(context, "\"r\" must satisfy 0 < r < 1");
        if (!base) bad(context, "sequence kind \"" + name + "\" needs the instance field \"f\"");
        seq.base = std::move(*base);
        if (name == "shifted") {
            if (auto it = j.find("g"); it != j.end()) {
                seq.shift = fn_from_json(*it, n, std::string(context) + ".g");
                if (!is_nonnegative(seq.shift)) bad(context, "\"g\" must be non-negative");
            } else {
                seq.shift = constant_fn(GroundSet(n), 1);
            }
        }
    } else if (name == "explicit") {
        seq.kind = SequenceSpec::Kind::Explicit;
        const Json& terms = field(j, "terms", context);
        if (!terms.is_array() || terms.empty()) bad(context, "\"terms\" must be a nonempty array");
        for (std::size_t i = 0; i < terms.size(); ++i) {
            seq.explicit_terms.push_back(fn_from_json(
                terms[i], n, std::string(context) + ".terms[" + std::to_string(i) + "]"));
        }
        if (auto it = j.find("limit"); it != j.end()) {
            seq.explicit_limit = fn_from_json(*it, n, std::string(context) + ".limit");
        }
    } else if (name == "example5") {
        seq.kind = SequenceSpec::Kind::Example5;
        seq.truncation = int_field(j, "N", context);
        if (seq.truncation < 1) bad(context, "\"N\" must be >= 1");
    } else {
        bad(context, "unknown sequence kind \"" + name +
                         "\" (expected scaled, shifted, explicit, or example5)");
    }
    return seq;
}

ProblemFile problem_from_json(const Json& j, const SizeCaps& caps) {
    ProblemFile p{measure_from_json(j, caps, "instance"), {}, {}, {}, {}};
    const int n = p.measure.ground.n;
    if (auto it = j.find("f"); it != j.end()) p.f = fn_from_json(*it, n, "instance.f");
    if (auto it = j.find("g"); it != j.end()) p.g = fn_from_json(*it, n, "instance.g");
    if (auto it = j.find("simple_functions"); it != j.end()) {
        if (!it->is_array()) bad("instance.simple_functions", "expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            p.simple_functions.push_back(simple_function_from_json(
                (*it)[k], p.measure.ground,
                "instance.simple_functions[" + std::to_string(k) + "]"));
        }
    }
    if (auto it = j.find("sequence"); it != j.end()) p.sequence = *it;
    return p;
}

ProblemFile load_problem_file(const std::string& path, const SizeCaps& caps) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return problem_from_json(j, caps);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json problem_to_json(const ProblemFile& p) {
    Json j = measure_to_json(p.measure);
    if (p.f) j["f"] = fn_to_json(*p.f);
    if (p.g) j["g"] = fn_to_json(*p.g);
    if (!p.simple_functions.empty()) {
        Json arr = Json::array();
        for (const auto& phi : p.simple_functions) arr.push_back(simple_function_to_json(phi));
        j["simple_functions"] = std::move(arr);
    }
    if (p.sequence) j["sequence"] = *p.sequence;
    return j;
}

namespace {

const char* integral_status_name(IntegralStatus s) {
    switch (s) {
        case IntegralStatus::Value: return "value";
        case IntegralStatus::Infeasible: return "infeasible";
        case IntegralStatus::Unbounded: return "unbounded";
        case IntegralStatus::Unsupported: return "unsupported";
    }
    return "?";
}

}  // namespace

Json integral_result_to_json(const IntegralResult& r, bool include_witness) {
    Json j;
    j["status"] = integral_status_name(r.status);
    if (r.has_value()) {
        j["value"] = rat_string(r.value);
        if (include_witness) j["witness"] = simple_function_to_json(r.witness);
    }
    return j;
}

std::string law_status_name(LawStatus status) {
    switch (status) {
        case LawStatus::Holds: return "holds";
        case LawStatus::Violated: return "violated";
        case LawStatus::HypothesesNotMet: return "hypotheses-not-met";
    }
    return "?";
}

Json law_instance_to_json(const LawInstance& inst) {
    Json j;
    j["law"] = inst.law;
    if (inst.measure) {
        const Json m = measure_to_json(*inst.measure);
        j["n"] = m.at("n");
        j["mu"] = m.at("mu");
    }
    if (inst.f) j["f"] = fn_to_json(*inst.f);
    if (inst.g) j["g"] = fn_to_json(*inst.g);
    if (inst.delta) j["delta"] = rat_string(*inst.delta);
    if (inst.scalar) j["c"] = rat_string(*inst.scalar);
    if (inst.coeff_a) j["a"] = rat_string(*inst.coeff_a);
    if (inst.coeff_b) j["b"] = rat_string(*inst.coeff_b);
    if (inst.restrict_set) {
        Json points = Json::array();
        for (int x = 0; *inst.restrict_set >> x; ++x) {
            if (mask_contains(*inst.restrict_set, x)) points.push_back(x);
        }
        j["A"] = std::move(points);
    }
    if (inst.family) j["family"] = family_name(*inst.family);
    if (inst.direction) j["direction"] = *inst.direction == Direction::Lower ? "lower" : "upper";
    if (inst.law == "example5") j["N"] = inst.example5_truncation;
    if (!inst.enforce_hypotheses) j["enforce_hypotheses"] = false;
    return j;
}

LawInstance law_instance_from_json(const Json& j, const SizeCaps& caps) {
    const std::string context = "law instance";
    LawInstance inst;
    const Json& law = field(j, "law", context);
    if (!law.is_string()) bad(context, "\"law\" must be a string");
    inst.law = law.get<std::string>();

    if (j.contains("mu")) inst.measure = measure_from_json(j, caps, context);
    const int n = inst.measure ? inst.measure->ground.n : 0;
    if (auto it = j.find("f"); it != j.end()) inst.f = fn_from_json(*it, n, "law instance.f");
    if (auto it = j.find("g"); it != j.end()) inst.g = fn_from_json(*it, n, "law instance.g");
    if (auto it = j.find("delta"); it != j.end())
        inst.delta = rational_from_json(*it, "law instance.delta");
    if (auto it = j.find("c"); it != j.end())
        inst.scalar = rational_from_json(*it, "law instance.c");
    if (auto it = j.find("a"); it != j.end())
        inst.coeff_a = rational_from_json(*it, "law instance.a");
    if (auto it = j.find("b"); it != j.end())
        inst.coeff_b = rational_from_json(*it, "law instance.b");
    if (auto it = j.find("A"); it != j.end()) {
        if (!it->is_array()) bad(context, "\"A\" must be an array of points");
        Mask a = 0;
        for (const Json& pt : *it) {
            if (!pt.is_number_integer()) bad(context, "\"A\" must contain integers");
            const int x = pt.get<int>();
            if (x < 0 || x >= n) bad(context, "\"A\" contains a point outside the ground set");
            a |= Mask{1} << x;
        }
        inst.restrict_set = a;
    }
    if (auto it = j.find("family"); it != j.end()) {
        if (!it->is_string()) bad(context, "\"family\" must be a string");
        auto tag = parse_family(it->get<std::string>());
        if (!tag) bad(context, "unknown family \"" + it->get<std::string>() + "\"");
        inst.family = *tag;
    }
    if (auto it = j.find("direction"); it != j.end()) {
        const std::string d = it->get<std::string>();
        if (d != "lower" && d != "upper") bad(context, "direction must be lower or upper");
        inst.direction = d == "lower" ? Direction::Lower : Direction::Upper;
    }
    if (auto it = j.find("N"); it != j.end()) inst.example5_truncation = it->get<int>();
    if (auto it = j.find("enforce_hypotheses"); it != j.end())
        inst.enforce_hypotheses = it->get<bool>();
    return inst;
}

Json law_report_to_json(const LawReport& report) {
    Json j;
    j["law"] = report.law;
    j["status"] = law_status_name(report.status);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json cj;
        cj["label"] = c.label;
        cj["relation"] = c.relation;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["holds"] = c.holds;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (!report.note.empty()) j["note"] = report.note;
    j["instance"] = law_instance_to_json(report.instance);
    return j;
}

std::string law_reports_to_jsonl(const std::vector<LawReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += law_report_to_json(r).dump();
        out += "\n";
    }
    return out;
}

namespace {

const char* hypothesis_status_name(HypothesisNote::Status s) {
    switch (s) {
        case HypothesisNote::Status::Met: return "met";
        case HypothesisNote::Status::NotMet: return "not-met";
        case HypothesisNote::Status::Vacuous: return "vacuous";
    }
    return "?";
}

}  // namespace

Json convergence_report_to_json(const ConvergenceReport& report) {
    Json j;
    Json rows = Json::array();
    for (const auto& [n, value] : report.rows) {
        rows.push_back(Json::array({n, rat_string(value)}));
    }
    j["rows"] = std::move(rows);
    j["limit"] = rat_string(report.limit_value);
    j["verdict"] = report.verdict == ConvergenceVerdict::Converged ? "CONVERGED"
                                                                   : "LIMIT-EXCHANGE-FAILS";
    j["converged_at"] = report.converged_at;
    Json hyp = Json::array();
    for (const auto& h : report.hypotheses) {
        Json hj;
        hj["id"] = h.id;
        hj["status"] = hypothesis_status_name(h.status);
        hj["note"] = h.note;
        hyp.push_back(std::move(hj));
    }
    j["hypotheses"] = std::move(hyp);
    return j;
}

std::string convergence_report_to_csv(const ConvergenceReport& report) {
    std::ostringstream out;
    out << "n,value\n";
    for (const auto& [n, value] : report.rows) {
        out << n << "," << rat_string(value) << "\n";
    }
    out << "limit," << rat_string(report.limit_value) << "\n";
    out << "verdict,"
        << (report.verdict == ConvergenceVerdict::Converged ? "CONVERGED" : "LIMIT-EXCHANGE-FAILS");
    if (report.converged_at >= 0) out << ",n=" << report.converged_at;
    out << "\n";
    for (const auto& h : report.hypotheses) {
        out << "hypothesis," << h.id << "," << hypothesis_status_name(h.status) << ","
            << "\"" << h.note << "\"\n";
    }
    return out.str();
}

}  // namespace nonlin
