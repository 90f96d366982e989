#pragma once

#include <gmpxx.h>

#include <string>

namespace cliff {

// Exact rational coefficients. GMP keeps results canonical (reduced
// fraction, positive denominator) as long as every value enters through
// rat(); all arithmetic stays exact, so algebraic identities can be
// asserted with operator== and no tolerance.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "num/den" with the denominator always present ("3/1", "-1/2").
inline std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Shortest exact form: "3", "-1/2".
inline std::string pretty_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return fraction_string(r);
}

}  // namespace cliff
