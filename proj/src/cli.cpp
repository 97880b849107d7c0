#include "nonlin/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nonlin/convergence.hpp"
#include "nonlin/io.hpp"
#include "nonlin/laws.hpp"

namespace nonlin {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRefused = 2;

FamilyTag parse_family_or_throw(const std::string& text) {
    auto tag = parse_family(text);
    if (!tag) {
        throw ParseError("unknown family \"" + text +
                         "\" (expected one of P+, P+-, P+mu, P+-mu, C+, C+-, C+mu, C+-mu)");
    }
    return *tag;
}

Direction parse_direction_or_throw(const std::string& text) {
    if (text == "lower") return Direction::Lower;
    if (text == "upper") return Direction::Upper;
    throw ParseError("unknown direction \"" + text + "\" (expected lower or upper)");
}

Rational parse_rational_or_throw(const std::string& text, const char* what) {
    std::string err;
    auto r = parse_rational(text, &err);
    if (!r) throw ParseError(std::string(what) + ": " + err);
    return *r;
}

MeasureKind parse_kind_or_throw(const std::string& text) {
    if (text == "general") return MeasureKind::General;
    if (text == "subadditive") return MeasureKind::Subadditive;
    if (text == "additive") return MeasureKind::Additive;
    throw ParseError("unknown measure kind \"" + text +
                     "\" (expected general, subadditive, or additive)");
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError(path + ": cannot open for writing");
    file << content;
}

struct IntegrateOptions {
    std::string input;
    std::string family;
    std::string direction = "lower";
    bool witness = false;
};

int cmd_integrate(const IntegrateOptions& opt, std::ostream& out) {
    const SizeCaps caps = SizeCaps::from_env();
    const ProblemFile problem = load_problem_file(opt.input, caps);
    if (!problem.f) throw ParseError(opt.input + ": instance has no \"f\" to integrate");
    const IntegralSpec spec{parse_family_or_throw(opt.family),
                            parse_direction_or_throw(opt.direction)};
    const IntegralResult result = integrate(problem.measure, *problem.f, spec, caps);
    out << integral_result_to_json(result, opt.witness).dump() << "\n";
    return result.has_value() ? kExitOk : kExitRefused;
}

struct ValidateOptions {
    std::string input;
};

int cmd_validate(const ValidateOptions& opt, std::ostream& out) {
    const SizeCaps caps = SizeCaps::from_env();
    const ProblemFile problem = load_problem_file(opt.input, caps);
    Json j;
    j["ok"] = true;
    j["n"] = problem.measure.ground.n;
    j["subadditive"] = is_subadditive(problem.measure);
    j["additive"] = is_additive(problem.measure);
    j["has_f"] = problem.f.has_value();
    if (!problem.simple_functions.empty()) {
        j["simple_functions"] = problem.simple_functions.size();
    }
    out << j.dump() << "\n";
    return kExitOk;
}

struct LawsOptions {
    std::string law;
    int trials = 1000;
    std::uint64_t seed = 42;
    int max_n = 5;
    std::string measure_kind;
    int truncation = 6;
    std::string output;
};

int cmd_laws(const LawsOptions& opt, std::ostream& out, std::ostream& err) {
    if (!is_known_law(opt.law)) {
        err << "unknown law id \"" << opt.law << "\"; valid ids:";
        for (const auto& id : law_ids()) err << " " << id;
        err << "\n";
        return kExitInputError;
    }
    LawSuiteConfig config;
    config.law = opt.law;
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.max_n = opt.max_n;
    config.example5_truncation = opt.truncation;
    if (!opt.measure_kind.empty()) config.measure_kind = parse_kind_or_throw(opt.measure_kind);

    const LawSuiteResult result = run_law_suite(config);

    const char* kind_name = result.kind_used == MeasureKind::General      ? "general"
                            : result.kind_used == MeasureKind::Subadditive ? "subadditive"
                                                                           : "additive";
    out << "law: " << opt.law << "\n";
    out << "trials: " << static_cast<int>(result.reports.size()) << "  seed: " << opt.seed
        << "  max-n: " << opt.max_n << "  measure-kind: " << kind_name << "\n";
    out << "holds: " << result.holds << "  violated: " << result.violated
        << "  hypotheses-not-met: " << result.hypotheses_not_met << "\n";

    if (!opt.output.empty()) {
        write_output(opt.output, law_reports_to_jsonl(result.reports), out);
        out << "report: " << opt.output << "\n";
    }
    return kExitOk;
}

struct ConvergeOptions {
    std::string input;
    std::string sequence;  // scaled | shifted | explicit | example5 (or from file)
    std::string ratio = "1/2";
    int truncation = 6;
    std::string family = "P+";
    std::string direction = "lower";
    int n_max = 40;
    std::string tol = "1/1000000000";
    std::string format = "csv";
    std::string output;
};

int cmd_converge(const ConvergeOptions& opt, std::ostream& out) {
    const SizeCaps caps = SizeCaps::from_env();
    const IntegralSpec spec{parse_family_or_throw(opt.family),
                            parse_direction_or_throw(opt.direction)};
    if (spec.family.structure == SetStructure::Covering &&
        spec.family.sign == CoeffSign::Signed) {
        throw Error("unsupported family: no integral is defined over signed coverings");
    }
    const Rational tol = parse_rational_or_throw(opt.tol, "--tol");

    std::optional<MonotoneMeasure> measure;
    std::optional<MeasurableFn> base;
    std::optional<Json> sequence_json;
    if (!opt.input.empty()) {
        ProblemFile problem = load_problem_file(opt.input, caps);
        base = problem.f;
        sequence_json = problem.sequence;
        measure.emplace(std::move(problem.measure));
    }

    SequenceSpec seq;
    if (!opt.sequence.empty()) {
        Json j;
        j["kind"] = opt.sequence;
        if (opt.sequence == "scaled" || opt.sequence == "shifted") j["r"] = opt.ratio;
        if (opt.sequence == "example5") j["N"] = opt.truncation;
        if (opt.sequence == "explicit") {
            if (!sequence_json) {
                throw ParseError("--sequence explicit needs a \"sequence\" entry in the input file");
            }
            j = *sequence_json;
        }
        seq = sequence_spec_from_json(j, base, measure ? measure->ground.n : 0, "sequence");
    } else if (sequence_json) {
        seq = sequence_spec_from_json(*sequence_json, base, measure ? measure->ground.n : 0,
                                      "instance.sequence");
    } else {
        throw ParseError("no sequence given: use --sequence or a \"sequence\" file entry");
    }

    if (seq.kind == SequenceSpec::Kind::Example5) {
        // the truncated instance carries its own measure
        measure.emplace(example5_instance(seq.truncation).measure);
    }
    if (!measure) throw ParseError("no instance file given (required for this sequence kind)");

    const ConvergenceReport report = run_convergence(*measure, seq, spec, opt.n_max, tol, caps);
    if (opt.format == "json") {
        write_output(opt.output, convergence_report_to_json(report).dump() + "\n", out);
    } else if (opt.format == "csv") {
        write_output(opt.output, convergence_report_to_csv(report), out);
    } else {
        throw ParseError("unknown format \"" + opt.format + "\" (expected json or csv)");
    }
    return kExitOk;
}

struct OracleCheckOptions {
    int n = 4;
    int trials = 100;
    std::uint64_t seed = 42;
};

int cmd_oracle_check(const OracleCheckOptions& opt, std::ostream& out) {
    const SizeCaps caps = SizeCaps::from_env();
    SplitMix64 rng(opt.seed);
    int partition_checked = 0;
    int lp_checked = 0;
    int mismatches = 0;

    const bool partition_ok = opt.n <= caps.partition_oracle;
    const int lp_columns = (1 << opt.n) - 1 + opt.n;
    const bool lp_ok = lp_columns <= caps.lp_oracle_columns && opt.n <= caps.covering_lp;
    if (!partition_ok) {
        out << "partition oracle skipped: n=" << opt.n << " exceeds the Bell-enumeration cap "
            << caps.partition_oracle << "\n";
    }
    if (!lp_ok) {
        out << "basis-enumeration oracle skipped: " << lp_columns
            << " columns exceed the cap " << caps.lp_oracle_columns << "\n";
    }

    for (int t = 0; t < opt.trials; ++t) {
        GroundSet ground(opt.n);
        const MeasureKind kind = static_cast<MeasureKind>(rng.below(3));
        const MonotoneMeasure m = random_measure(ground, rng, kind);
        MeasurableFn signed_f;
        MeasurableFn nonneg_f;
        for (int i = 0; i < opt.n; ++i) {
            signed_f.values.push_back(random_rational(rng, -8, 8, 6));
            nonneg_f.values.push_back(random_rational(rng, 0, 12, 6));
        }

        if (partition_ok) {
            for (CoeffSign sign : {CoeffSign::NonNegative, CoeffSign::Signed}) {
                for (Direction dir : {Direction::Lower, Direction::Upper}) {
                    const MeasurableFn& f =
                        sign == CoeffSign::NonNegative ? nonneg_f : signed_f;
                    const IntegralResult got = partition_integral(m, f, sign, dir, caps);
                    const auto want = brute_force_partition_oracle(m, f, sign, dir, caps);
                    const bool match = want ? (got.has_value() && got.value == *want)
                                            : !got.has_value();
                    ++partition_checked;
                    if (!match) {
                        ++mismatches;
                        out << "MISMATCH partition trial=" << t << "\n";
                    }
                }
            }
        }
        if (lp_ok) {
            for (Direction dir : {Direction::Lower, Direction::Upper}) {
                const LinearProgram lp = covering_lp(m, nonneg_f, dir);
                const LpOutcome got = solve(lp);
                const auto basics = enumerate_basic_solutions(lp, caps.lp_oracle_columns);
                ++lp_checked;
                if (got.status != LpStatus::Optimal || basics.empty()) {
                    ++mismatches;
                    out << "MISMATCH covering status trial=" << t << "\n";
                    continue;
                }
                Rational best = basics.front().value;
                for (const auto& b : basics) {
                    if (dir == Direction::Lower ? b.value > best : b.value < best) best = b.value;
                }
                if (best != got.value) {
                    ++mismatches;
                    out << "MISMATCH covering trial=" << t << " simplex=" << rat_string(got.value)
                        << " oracle=" << rat_string(best) << "\n";
                }
            }
        }
    }

    out << "partition comparisons: " << partition_checked << "\n";
    out << "covering comparisons: " << lp_checked << "\n";
    out << "mismatches: " << mismatches << "\n";
    return mismatches == 0 ? kExitOk : kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decomposition-type non-linear integrals on finite ground sets"};
    app.require_subcommand(1);

    IntegrateOptions integrate_opt;
    auto* sub_integrate =
        app.add_subcommand("integrate", "compute one integral of the instance's f");
    sub_integrate->add_option("--input", integrate_opt.input, "instance JSON file")->required();
    sub_integrate->add_option("--family", integrate_opt.family, "family tag (P+, C+mu, ...)")
        ->required();
    sub_integrate->add_option("--direction", integrate_opt.direction, "lower or upper");
    sub_integrate->add_flag("--witness", integrate_opt.witness, "include the optimal witness");

    ValidateOptions validate_opt;
    auto* sub_validate = app.add_subcommand("validate", "parse and validate an instance file");
    sub_validate->add_option("--input", validate_opt.input, "instance JSON file")->required();

    LawsOptions laws_opt;
    auto* sub_laws = app.add_subcommand("laws", "run a law suite on random instances");
    sub_laws->add_option("law", laws_opt.law, "law id")->required();
    sub_laws->add_option("--trials", laws_opt.trials, "number of random instances");
    sub_laws->add_option("--seed", laws_opt.seed, "RNG seed");
    sub_laws->add_option("--n", laws_opt.max_n, "maximum ground set size");
    sub_laws->add_option("--measure-kind", laws_opt.measure_kind,
                         "general, subadditive, or additive");
    sub_laws->add_option("--N", laws_opt.truncation, "example5 truncation");
    sub_laws->add_option("--output", laws_opt.output, "JSON-lines report file");

    ConvergeOptions conv_opt;
    auto* sub_converge = app.add_subcommand("converge", "run a convergence experiment");
    sub_converge->add_option("--input", conv_opt.input, "instance JSON file");
    sub_converge->add_option("--sequence", conv_opt.sequence,
                             "scaled, shifted, explicit, or example5");
    sub_converge->add_option("--r", conv_opt.ratio, "ratio for scaled/shifted");
    sub_converge->add_option("--N", conv_opt.truncation, "example5 truncation");
    sub_converge->add_option("--family", conv_opt.family, "family tag");
    sub_converge->add_option("--direction", conv_opt.direction, "lower or upper");
    sub_converge->add_option("--nmax", conv_opt.n_max, "number of terms");
    sub_converge->add_option("--tol", conv_opt.tol, "convergence tolerance (rational)");
    sub_converge->add_option("--format", conv_opt.format, "csv or json");
    sub_converge->add_option("--output", conv_opt.output, "write the table here");

    OracleCheckOptions oracle_opt;
    auto* sub_oracle =
        app.add_subcommand("oracle-check", "cross-check the solvers against the oracles");
    sub_oracle->add_option("--n", oracle_opt.n, "ground set size");
    sub_oracle->add_option("--trials", oracle_opt.trials, "random instances");
    sub_oracle->add_option("--seed", oracle_opt.seed, "RNG seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (sub_integrate->parsed()) return cmd_integrate(integrate_opt, out);
        if (sub_validate->parsed()) return cmd_validate(validate_opt, out);
        if (sub_laws->parsed()) return cmd_laws(laws_opt, out, err);
        if (sub_converge->parsed()) return cmd_converge(conv_opt, out);
        if (sub_oracle->parsed()) return cmd_oracle_check(oracle_opt, out);
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        // semantic refusals (unsupported/infeasible mid-run) land here
        err << "error: " << e.what() << "\n";
        return kExitRefused;
    }
    return kExitInputError;
}

}  // namespace nonlin
