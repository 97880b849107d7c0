#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonlin/ground.hpp"
#include "nonlin/measure.hpp"
#include "nonlin/rational.hpp"

namespace nonlin {

/// A rational-valued function on the ground points: values[x] = f(x).
struct MeasurableFn {
    std::vector<Rational> values;

    int points() const { return static_cast<int>(values.size()); }
    const Rational& at(int x) const { return values[x]; }
};

/// A simple function is an ordered sequence of (coefficient, set) pairs.
/// It is identified pointwise with sum_k a_k * chi_{A_k}, but two pairwise
/// sequences with the same pointwise values are still distinct objects:
/// against a non-additive measure their basic sums can differ, so nothing
/// here ever collapses a sequence down to its pointwise function.
struct SimpleFunction {
    struct Pair {
        Rational coeff;
        Mask set = 0;
    };
    std::vector<Pair> pairs;
};

enum class SetStructure { Partition, Covering };
enum class CoeffSign { NonNegative, Signed };
enum class TermCount { Finite, Countable };

/// One of the 8 simple-function families: {partition, covering} x
/// {non-negative, signed} x {finite, countable}. On a finite ground set the
/// countable families coincide with their finite twins (a countable
/// partition has at most n nonempty blocks; a countable covering's basic sum
/// is invariant under merging coefficient mass on identical sets, of which
/// there are finitely many), so Countable tags always travel with Finite.
struct FamilyTag {
    SetStructure structure = SetStructure::Partition;
    CoeffSign sign = CoeffSign::NonNegative;
    TermCount terms = TermCount::Finite;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

namespace families {
inline constexpr FamilyTag p_plus{SetStructure::Partition, CoeffSign::NonNegative, TermCount::Finite};
inline constexpr FamilyTag p_signed{SetStructure::Partition, CoeffSign::Signed, TermCount::Finite};
inline constexpr FamilyTag p_plus_mu{SetStructure::Partition, CoeffSign::NonNegative, TermCount::Countable};
inline constexpr FamilyTag p_signed_mu{SetStructure::Partition, CoeffSign::Signed, TermCount::Countable};
inline constexpr FamilyTag c_plus{SetStructure::Covering, CoeffSign::NonNegative, TermCount::Finite};
inline constexpr FamilyTag c_signed{SetStructure::Covering, CoeffSign::Signed, TermCount::Finite};
inline constexpr FamilyTag c_plus_mu{SetStructure::Covering, CoeffSign::NonNegative, TermCount::Countable};
inline constexpr FamilyTag c_signed_mu{SetStructure::Covering, CoeffSign::Signed, TermCount::Countable};

inline constexpr FamilyTag all[8] = {p_plus,    p_signed,    p_plus_mu, p_signed_mu,
                                     c_plus,    c_signed,    c_plus_mu, c_signed_mu};
}  // namespace families

/// Canonical ASCII name: "P+", "P+-", "P+mu", "P+-mu", "C+", ...
std::string family_name(FamilyTag tag);

/// Accepts the canonical names plus the unicode spellings ("P±", "C+μ",
/// "P±_μ"); underscores are ignored.
std::optional<FamilyTag> parse_family(std::string_view text);

/// Pointwise value phi(x) = sum of a_k over pairs whose set contains x.
Rational eval(const SimpleFunction& phi, int x);

/// Basic sum mu(phi) = sum_k a_k * mu(A_k). Depends on the representation,
/// not just the pointwise function.
Rational basic_sum(const MonotoneMeasure& m, const SimpleFunction& phi);

/// Every family the pair-sequence belongs to, in the canonical order of
/// families::all. Partition ignores empty sets (they contribute a_k*mu({})=0)
/// and requires the nonempty ones pairwise disjoint with union X; Covering
/// requires union X; NonNegative requires every listed coefficient >= 0.
std::vector<FamilyTag> classify(const SimpleFunction& phi, const GroundSet& ground);

bool classify_contains(const SimpleFunction& phi, const GroundSet& ground, FamilyTag tag);

/// phi(x) <= f(x) at every ground point (membership test for L(E, f)).
bool below(const SimpleFunction& phi, const MeasurableFn& f);
/// phi(x) >= f(x) at every ground point (membership test for U(E, f)).
bool above(const SimpleFunction& phi, const MeasurableFn& f);

/// Merges duplicate sets (coefficients add), drops zero-coefficient and
/// empty-set pairs. Preserves both eval and basic_sum. Output pairs are
/// ordered by set mask.
SimpleFunction normalize_covering(const SimpleFunction& phi);

// pointwise helpers on MeasurableFn

MeasurableFn constant_fn(const GroundSet& ground, const Rational& c);
MeasurableFn indicator_fn(const GroundSet& ground, Mask a);
MeasurableFn add(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn add_constant(const MeasurableFn& f, const Rational& c);
MeasurableFn scale(const Rational& c, const MeasurableFn& f);
/// f * chi_A: keeps f on A, zero elsewhere.
MeasurableFn restrict_to(const MeasurableFn& f, Mask a);
/// max(f, 0) pointwise.
MeasurableFn clamp_nonnegative(const MeasurableFn& f);
bool pointwise_leq(const MeasurableFn& f, const MeasurableFn& g);
bool is_nonnegative(const MeasurableFn& f);

}  // namespace nonlin
