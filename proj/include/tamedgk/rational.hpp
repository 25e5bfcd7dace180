#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tgk {

// All coefficients in this library are exact rationals.  GMP's mpq_class
// keeps values canonical (reduced, positive denominator) after every
// operation, which is exactly the invariant the rest of the code relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical "p" / "p/q" rendering used by the serializer, the reports and
// the JSON output.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace tgk
