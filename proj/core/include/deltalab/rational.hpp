#ifndef DELTALAB_RATIONAL_HPP
#define DELTALAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace deltalab::exactcalc {

/// Arbitrary-precision rational. All breakpoints, scale parameters and
/// polynomial coefficients in the engine are built from this type; nothing
/// in the exact layer ever rounds.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "n", "-n/d" or "n/d" (base 10). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical decimal form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// q^e for integer e (e < 0 requires q != 0).
Rational pow_rational(const Rational& q, long e);

}  // namespace deltalab::exactcalc

#endif
