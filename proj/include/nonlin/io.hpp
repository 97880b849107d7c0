#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nonlin/convergence.hpp"
#include "nonlin/integral.hpp"
#include "nonlin/laws.hpp"
#include "nonlin/measure.hpp"
#include "nonlin/simple_function.hpp"

namespace nonlin {

/// Key order is preserved so that identical inputs serialize to identical
/// bytes — report files are diffable goldens.
using Json = nlohmann::ordered_json;

// rationals on the wire: "p/q" in lowest terms, q > 0, "p" for integers

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, std::string_view context);

// measures: {"n": 2, "mu": ["0", "1", "1", "1"]}, index = subset bitmask

Json measure_to_json(const MonotoneMeasure& m);
MonotoneMeasure measure_from_json(const Json& j, const SizeCaps& caps,
                                  std::string_view context = "measure");

// measurable functions: a plain array of n rational strings

Json fn_to_json(const MeasurableFn& f);
MeasurableFn fn_from_json(const Json& j, int n, std::string_view context);

// simple functions: [["1/2", [0, 1]], ["3", [0]]]

Json simple_function_to_json(const SimpleFunction& phi);
SimpleFunction simple_function_from_json(const Json& j, const GroundSet& ground,
                                         std::string_view context);

// sequence specs:
//   {"kind": "scaled", "r": "1/2"}                  base f from the problem file
//   {"kind": "shifted", "r": "1/2", "g": [...]}     g defaults to chi_X
//   {"kind": "explicit", "terms": [[...], ...], "limit": [...]}
//   {"kind": "example5", "N": 6}

Json sequence_spec_to_json(const SequenceSpec& seq);
SequenceSpec sequence_spec_from_json(const Json& j, std::optional<MeasurableFn> base, int n,
                                     std::string_view context);

/// An instance file: {"n": ..., "mu": [...]} plus optional "f", "g",
/// "simple_functions", "sequence".
struct ProblemFile {
    MonotoneMeasure measure;
    std::optional<MeasurableFn> f;
    std::optional<MeasurableFn> g;
    std::vector<SimpleFunction> simple_functions;
    std::optional<Json> sequence;  // parsed lazily, once f is known
};

ProblemFile problem_from_json(const Json& j, const SizeCaps& caps);
ProblemFile load_problem_file(const std::string& path, const SizeCaps& caps);
Json problem_to_json(const ProblemFile& p);

Json integral_result_to_json(const IntegralResult& r, bool include_witness);

Json law_instance_to_json(const LawInstance& inst);
LawInstance law_instance_from_json(const Json& j, const SizeCaps& caps);
Json law_report_to_json(const LawReport& report);
std::string law_status_name(LawStatus status);

/// One JSON object per line, in trial order.
std::string law_reports_to_jsonl(const std::vector<LawReport>& reports);

Json convergence_report_to_json(const ConvergenceReport& report);
/// Rows "n,value", a "limit,..." row, a "verdict,..." row, then one
/// "hypothesis,..." row per note. Values are exact rational strings.
std::string convergence_report_to_csv(const ConvergenceReport& report);

}  // namespace nonlin
