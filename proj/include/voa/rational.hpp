#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace voa {

// Every scalar in the engine is an exact rational. GMP keeps values in
// lowest terms with positive denominator as long as no value is built from
// a raw non-canonical fraction; parse_rational below goes through an exact
// integer division so that invariant holds for parsed input too.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Exact conversion; throws std::invalid_argument unless value is an
/// integer that fits in long long.
long long to_long(const Rational& value);

/// floor(value) as an Integer.
Integer floor_rational(const Rational& value);

/// Binomial coefficient with integer (possibly negative) top argument:
/// C(top, k) = top(top-1)...(top-k+1)/k!, and 0 for k < 0.
Rational binomial(long long top, long long k);

}  // namespace voa
