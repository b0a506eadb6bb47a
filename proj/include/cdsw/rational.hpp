#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cdsw {

/// Exact rational scalar used throughout the engine.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" (or "p" when q == 1), the form used in JSON exports and reports.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace cdsw
