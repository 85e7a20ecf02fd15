#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace credal {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or a finite decimal such as "-0.125" into a canonical
/// rational. Throws ValidationError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Lowest-terms text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Canonical num/den. Use instead of the two-argument mpq_class constructor,
/// which leaves the fraction unreduced.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace credal
