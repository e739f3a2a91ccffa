#ifndef PADICFAM_RATIONAL_HPP
#define PADICFAM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace padicfam {

/// Exact arbitrary-precision rational, the universal scalar of the library.
/// GMP keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_int(const Rational& r);
Integer ceil_int(const Rational& r);

Integer pow_int(const Integer& base, unsigned long exp);

/// p-adic valuation of a nonzero integer.
unsigned long ord_p(Integer n, const Integer& p);

/// Parses "a/b" or a bare integer; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// "a/b" for non-integers, bare "a" otherwise.
std::string rational_to_string(const Rational& r);

/// Decimal approximation with trailing zeros stripped, e.g. 5/4 -> "1.25".
std::string rational_to_decimal(const Rational& r, int digits = 4);

/// Parses a comma-separated list of rationals ("1/2,7/2"); empty string gives {}.
std::vector<Rational> parse_rational_csv(const std::string& text);

bool is_prime(const Integer& n);

}  // namespace padicfam

#endif
