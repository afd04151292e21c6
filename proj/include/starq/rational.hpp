#pragma once

#include <gmpxx.h>
#include <string>

namespace starq {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator, 0 stored as 0/1), which is exactly the invariant
// the rest of the engine relies on for equality tests.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Prints "a" when the denominator is 1, otherwise "a/b".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace starq
