#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cremona {

using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws Error(ParseError) on malformed input or
// a zero denominator.
Rational parse_rational(std::string_view text);

// Always "num/den" in lowest terms, e.g. "0/1", "-3/2".
std::string format_rational(const Rational& value);

// "%.12g" formatting used for every real-valued output column.
std::string format_real(double value);

inline Rational make_rational(long num, long den = 1) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace cremona
