#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qht {

/// Exact rational number; used for exponents, actions and base-field coefficients.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(SchemaError) on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Floor of a rational as a signed integer; the value must fit in a long.
long floor_to_long(const Rational& value);

Rational make_rational(long num, long den = 1);

mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace qht
