// Exact multivariate polynomials with canonically sorted terms.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doublekit/rational.hpp"
#include "doublekit/ring.hpp"

namespace doublekit {

// A power product x1^e1 * ... * xn^en.  The total degree is cached because
// the graded order consults it on every comparison.
struct Monomial {
  std::vector<unsigned> exps;
  unsigned degree = 0;

  bool operator==(const Monomial& other) const { return exps == other.exps; }
};

Monomial mono_one(std::size_t arity);
Monomial mono_var(std::size_t arity, std::size_t index, unsigned exp = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& divisor, const Monomial& multiple);
// Quotient multiple / divisor; caller must ensure divisibility.
Monomial mono_div(const Monomial& multiple, const Monomial& divisor);
bool mono_is_one(const Monomial& m);
// Pure power of a single variable: returns the variable index, or nullopt.
std::optional<std::size_t> mono_pure_power(const Monomial& m);

// Graded reverse lexicographic comparison: higher total degree wins; on ties
// the monomial with the smaller exponent in the last differing variable is
// the larger one.  Returns +1 when a > b, -1 when a < b, 0 when equal.
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Terms are kept sorted in strictly decreasing grevlex order with no zero
// coefficients, so equal polynomials have identical representations.
class Polynomial {
public:
  Polynomial() = default;  // zero in the empty ring; reassign before use
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }
  static Polynomial constant(const PolyRing& ring, const Rational& value);
  static Polynomial variable(const PolyRing& ring, std::size_t index);
  static Polynomial term(const PolyRing& ring, const Monomial& m,
                         const Rational& coeff);
  // Takes any term list, sorts and combines it into canonical form.
  static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Monomial& lead_monomial() const;
  const Rational& lead_coeff() const;
  unsigned total_degree() const;  // 0 for the zero polynomial

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Polynomial scaled(const Rational& c) const;
  // this * (coeff * mono): the workhorse of polynomial reduction.
  Polynomial times_term(const Monomial& mono, const Rational& coeff) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Exact division: returns this / divisor, throwing when the division
  // leaves a remainder.  Used by fraction-free elimination.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;
  // Parses the canonical text grammar:
  //   poly ::= ('-'|'+')? term (('+'|'-') term)*
  //   term ::= factor ('*' factor)*
  //   factor ::= nat ('/' nat)? | var ('^' nat)?
  static Polynomial parse(const PolyRing& ring, std::string_view text);

private:
  void check_same_ring(const Polynomial& other) const;

  PolyRing ring_;
  std::vector<Term> terms_;
};

std::string term_to_string(const PolyRing& ring, const Term& t,
                           bool leading_position);

}  // namespace doublekit
