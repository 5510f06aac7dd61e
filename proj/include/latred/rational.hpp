#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace latred {

/// Exact rational scalar. Values are kept in lowest terms with a positive
/// denominator by the backend; equality is exact.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", integer literals, and decimal literals with optional
/// exponent ("1.59851", "-1.22394e7").
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.template convert_to<double>(); }

inline bool is_integer(const Rational& value) { return denominator(value) == 1; }

}  // namespace latred
