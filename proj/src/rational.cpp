#include "nonlin/rational.hpp"

#include <cctype>

namespace nonlin {

Rational rat(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_string(const Rational& r) {
    return r.get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text, std::string* error) {
    auto fail = [&](const std::string& why) -> std::optional<Rational> {
        if (error) *error = "invalid rational \"" + std::string(text) + "\": " + why;
        return std::nullopt;
    };

    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    std::string_view num_part = rest;
    std::string_view den_part;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        if (den_part.find('/') != std::string_view::npos) return fail("more than one '/'");
        if (!all_digits(den_part)) return fail("denominator must be a positive integer");
    }
    if (!all_digits(num_part)) return fail("numerator must be an integer");

    mpz_class num(std::string(num_part), 10);
    mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(std::string(den_part), 10);
    if (den == 0) return fail("denominator is zero");
    if (negative) num = -num;

    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace nonlin
