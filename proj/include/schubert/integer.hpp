#pragma once

#include <gmpxx.h>

#include <string>

namespace schubert {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

/// "p/q" in lowest terms, or just "p" when the denominator is one.
inline std::string to_decimal(const Rational& q) { return q.get_str(10); }

/// Parses a (possibly signed) decimal integer; throws Error(Schema) on junk.
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

/// 2^e as an exact integer.
inline Integer pow2(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace schubert
