// Exact rational numbers: arbitrary-precision, always reduced, never rounded.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace doublekit {

// Every arithmetic failure in the library is reported through this type so
// callers (CLI, bindings, tests) have a single thing to catch.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// mpq_class keeps gcd(|num|, den) = 1 and den > 0 canonically, which is
// exactly the invariant we need; every operation is exact by construction.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace doublekit
