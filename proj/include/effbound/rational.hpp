#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace effbound {

using Integer = mpz_class;

/// GMP rationals are kept canonical (lowest terms, positive denominator)
/// by every arithmetic operation, so no separate reduction step exists.
using Rational = mpq_class;

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Least integer strictly greater than q.
Integer least_integer_above(const Rational& q);

/// Canonical exact rendering: "5/2", "-3", "0".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Shortest round-trip decimal of the nearest double. Display only.
std::string to_decimal(const Rational& q);

/// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
/// Throws Error(ParseError) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact rational square root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

/// A rational value or +infinity; used for tau, which is +inf on ample classes.
struct ExtendedRational {
    bool infinite = false;
    Rational value = 0;

    static ExtendedRational plus_infinity() { return {true, 0}; }
    static ExtendedRational finite(Rational v) { return {false, std::move(v)}; }

    bool operator==(const ExtendedRational& other) const
    {
        return infinite == other.infinite && (infinite || value == other.value);
    }
};

std::string to_string(const ExtendedRational& q);

} // namespace effbound
