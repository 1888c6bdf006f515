#ifndef MCLEX_RATIONAL_HPP
#define MCLEX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "mclex/errors.hpp"

namespace mclex {

/// Exact rational number. All scores, scales, weights and membership degrees
/// are kept exact so that equality tests in the cascades are deterministic.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt pow10(std::size_t k) {
    BigInt p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace detail

/// Parses "12", "-3.25", ".5" or "7/4" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    const std::string_view original = text;
    auto fail = [&]() -> Rational {
        throw ParseError("not a number: \"" + std::string(original) + "\"");
    };

    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) return fail();

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
        BigInt d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator: \"" + std::string(original) + "\"");
        Rational value{BigInt{std::string(num)}, d};
        return negative ? -value : value;
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
        if (frac_part.empty()) return fail();
    }
    if (int_part.empty() && frac_part.empty()) return fail();
    if (!int_part.empty() && !detail::all_digits(int_part)) return fail();
    if (!frac_part.empty() && !detail::all_digits(frac_part)) return fail();

    BigInt whole = int_part.empty() ? BigInt(0) : BigInt{std::string(int_part)};
    BigInt scale = detail::pow10(frac_part.size());
    BigInt frac = frac_part.empty() ? BigInt(0) : BigInt{std::string(frac_part)};
    Rational value{whole * scale + frac, scale};
    return negative ? -value : value;
}

/// Canonical text form: an integer, a finite decimal when the denominator is
/// of the form 2^a*5^b, otherwise "p/q". parse_rational round-trips it.
inline std::string format_rational(const Rational& value) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    if (den == 1) return num.str();

    BigInt rest = den;
    std::size_t twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.str() + "/" + den.str();

    const std::size_t digits = twos > fives ? twos : fives;
    BigInt scaled = abs(num) * detail::pow10(digits) / den;
    std::string text = scaled.str();
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
    if (num < 0) text.insert(0, "-");
    return text;
}

}  // namespace mclex

#endif  // MCLEX_RATIONAL_HPP
