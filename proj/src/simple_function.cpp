#include "nonlin/simple_function.hpp"

#include <algorithm>
#include <map>

namespace nonlin {

std::string family_name(FamilyTag tag) {
    std::string name(tag.structure == SetStructure::Partition ? "P" : "C");
    name += tag.sign == CoeffSign::NonNegative ? "+" : "+-";
    if (tag.terms == TermCount::Countable) name += "mu";
    return name;
}

std::optional<FamilyTag> parse_family(std::string_view text) {
    // normalize unicode spellings to the canonical ASCII form
    std::string s;
    for (std::size_t i = 0; i < text.size();) {
        if (text.compare(i, 2, "\xc2\xb1") == 0) {  // ±
            s += "+-";
            i += 2;
        } else if (text.compare(i, 2, "\xce\xbc") == 0) {  // μ
            s += "mu";
            i += 2;
        } else if (text[i] == '_') {
            ++i;
        } else {
            s += text[i];
            ++i;
        }
    }
    for (FamilyTag tag : families::all) {
        if (s == family_name(tag)) return tag;
    }
    return std::nullopt;
}

Rational eval(const SimpleFunction& phi, int x) {
    Rational v = 0;
    for (const auto& [coeff, set] : phi.pairs) {
        if (mask_contains(set, x)) v += coeff;
    }
    return v;
}

Rational basic_sum(const MonotoneMeasure& m, const SimpleFunction& phi) {
    Rational v = 0;
    for (const auto& [coeff, set] : phi.pairs) {
        v += coeff * m.at(set);
    }
    return v;
}

std::vector<FamilyTag> classify(const SimpleFunction& phi, const GroundSet& ground) {
    Mask covered = 0;
    Mask disjoint_union = 0;
    bool disjoint = true;
    bool nonnegative = true;
    for (const auto& [coeff, set] : phi.pairs) {
        covered |= set;
        if (set != 0) {
            if (disjoint_union & set) disjoint = false;
            disjoint_union |= set;
        }
        if (coeff < 0) nonnegative = false;
    }
    const bool covering = covered == ground.full();
    const bool partition = covering && disjoint;

    std::vector<FamilyTag> tags;
    for (FamilyTag tag : families::all) {
        if (tag.structure == SetStructure::Partition && !partition) continue;
        if (tag.structure == SetStructure::Covering && !covering) continue;
        if (tag.sign == CoeffSign::NonNegative && !nonnegative) continue;
        // Countable iff the finite twin applies: no extra condition on a
        // finite ground set.
        tags.push_back(tag);
    }
    return tags;
}

bool classify_contains(const SimpleFunction& phi, const GroundSet& ground, FamilyTag tag) {
    auto tags = classify(phi, ground);
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool below(const SimpleFunction& phi, const MeasurableFn& f) {
    for (int x = 0; x < f.points(); ++x) {
        if (eval(phi, x) > f.at(x)) return false;
    }
    return true;
}

bool above(const SimpleFunction& phi, const MeasurableFn& f) {
    for (int x = 0; x < f.points(); ++x) {
        if (eval(phi, x) < f.at(x)) return false;
    }
    return true;
}

SimpleFunction normalize_covering(const SimpleFunction& phi) {
    std::map<Mask, Rational> merged;
    for (const auto& [coeff, set] : phi.pairs) {
        if (set == 0) continue;
        merged[set] += coeff;
    }
    SimpleFunction out;
    for (const auto& [set, coeff] : merged) {
        if (coeff == 0) continue;
        out.pairs.push_back({coeff, set});
    }
    return out;
}

MeasurableFn constant_fn(const GroundSet& ground, const Rational& c) {
    return MeasurableFn{std::vector<Rational>(ground.n, c)};
}

MeasurableFn indicator_fn(const GroundSet& ground, Mask a) {
    MeasurableFn f{std::vector<Rational>(ground.n, Rational(0))};
    for (int x = 0; x < ground.n; ++x) {
        if (mask_contains(a, x)) f.values[x] = 1;
    }
    return f;
}

MeasurableFn add(const MeasurableFn& f, const MeasurableFn& g) {
    MeasurableFn out = f;
    for (int x = 0; x < f.points(); ++x) out.values[x] += g.at(x);
    return out;
}

MeasurableFn add_constant(const MeasurableFn& f, const Rational& c) {
    MeasurableFn out = f;
    for (auto& v : out.values) v += c;
    return out;
}

MeasurableFn scale(const Rational& c, const MeasurableFn& f) {
    MeasurableFn out = f;
    for (auto& v : out.values) v *= c;
    return out;
}

MeasurableFn restrict_to(const MeasurableFn& f, Mask a) {
    MeasurableFn out = f;
    for (int x = 0; x < f.points(); ++x) {
        if (!mask_contains(a, x)) out.values[x] = 0;
    }
    return out;
}

MeasurableFn clamp_nonnegative(const MeasurableFn& f) {
    MeasurableFn out = f;
    for (auto& v : out.values) {
        if (v < 0) v = 0;
    }
    return out;
}

bool pointwise_leq(const MeasurableFn& f, const MeasurableFn& g) {
    for (int x = 0; x < f.points(); ++x) {
        if (f.at(x) > g.at(x)) return false;
    }
    return true;
}

bool is_nonnegative(const MeasurableFn& f) {
    for (const auto& v : f.values) {
        if (v < 0) return false;
    }
    return true;
}

}  // namespace nonlin
