#ifndef LAZYVOR_RATIONAL_HPP
#define LAZYVOR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace lazyvor {

/// Exact rational scalar. Always reduced with a positive denominator; all
/// arithmetic in the library stays in this type (no floating point).
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Builds num/den in canonical (reduced, positive-denominator) form.
/// Throws DomainError if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p" or "p/q" with optional leading '-'. Strict: no whitespace,
/// no exponents, q > 0 after normalization. Throws SpecError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Largest integer <= r.
BigInt floor_int(const Rational& r);

/// Smallest integer >= r.
BigInt ceil_int(const Rational& r);

/// A rational u with u >= sqrt(r) and u >= 0. Requires r >= 0.
/// Used to turn squared-radius bounds into index bounds; never tight enough
/// to matter, always sound.
Rational sqrt_upper_bound(const Rational& r);

/// Decimal rendering with 12 significant digits, for display surfaces only.
std::string to_decimal_string(const Rational& r);

} // namespace lazyvor

#endif
