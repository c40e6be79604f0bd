#include "doublekit/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace doublekit {

Monomial mono_one(std::size_t arity) {
  return Monomial{std::vector<unsigned>(arity, 0), 0};
}

Monomial mono_var(std::size_t arity, std::size_t index, unsigned exp) {
  Monomial m = mono_one(arity);
  if (index >= arity) throw Error("variable index out of range");
  m.exps[index] = exp;
  m.degree = exp;
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  r.degree = a.degree + b.degree;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree = 0;
  for (std::size_t i = 0; i < r.exps.size(); ++i) {
    r.exps[i] = std::max(a.exps[i], b.exps[i]);
    r.degree += r.exps[i];
  }
  return r;
}

bool mono_divides(const Monomial& divisor, const Monomial& multiple) {
  if (divisor.degree > multiple.degree) return false;
  for (std::size_t i = 0; i < divisor.exps.size(); ++i)
    if (divisor.exps[i] > multiple.exps[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& multiple, const Monomial& divisor) {
  Monomial r = multiple;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= divisor.exps[i];
  r.degree = multiple.degree - divisor.degree;
  return r;
}

bool mono_is_one(const Monomial& m) { return m.degree == 0; }

std::optional<std::size_t> mono_pure_power(const Monomial& m) {
  std::optional<std::size_t> which;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (which) return std::nullopt;
    which = i;
  }
  return which;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(const PolyRing& ring, const Rational& value) {
  Polynomial p(ring);
  if (value != 0) p.terms_.push_back({mono_one(ring.arity()), value});
  return p;
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.push_back({mono_var(ring.arity(), index), Rational(1)});
  return p;
}

Polynomial Polynomial::term(const PolyRing& ring, const Monomial& m,
                            const Rational& coeff) {
  Polynomial p(ring);
  if (m.exps.size() != ring.arity()) throw Error("monomial arity mismatch");
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

Polynomial Polynomial::from_terms(const PolyRing& ring,
                                  std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_cmp(a.mono, b.mono) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (t.mono.exps.size() != ring.arity())
      throw Error("monomial arity mismatch");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].mono));
}

const Monomial& Polynomial::lead_monomial() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
  return terms_.front().mono;
}

const Rational& Polynomial::lead_coeff() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
  return terms_.front().coeff;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_) throw Error("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = grevlex_cmp(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = *this + other;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = *this - other;
  return *this;
}

Polynomial Polynomial::times_term(const Monomial& mono,
                                  const Rational& coeff) const {
  Polynomial r(ring_);
  if (coeff == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff * coeff;
    if (c != 0) r.terms_.push_back({mono_mul(t.mono, mono), std::move(c)});
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  // Multiply by the shorter operand termwise; each partial product is
  // already sorted, so repeated merge keeps the result canonical.
  const Polynomial& small = terms_.size() <= other.terms_.size() ? *this : other;
  const Polynomial& large = terms_.size() <= other.terms_.size() ? other : *this;
  Polynomial acc(ring_);
  for (const auto& t : small.terms_)
    acc += large.times_term(t.mono, t.coeff);
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial base = *this;
  Polynomial result = Polynomial::constant(ring_, Rational(1));
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (ring_ != other.ring_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono)) return false;
    if (terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_same_ring(divisor);
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(ring_);
  while (!rem.is_zero()) {
    if (!mono_divides(divisor.lead_monomial(), rem.lead_monomial()))
      throw Error("polynomial division is not exact");
    Monomial m = mono_div(rem.lead_monomial(), divisor.lead_monomial());
    Rational c = rem.lead_coeff() / divisor.lead_coeff();
    quot += Polynomial::term(ring_, m, c);
    rem -= divisor.times_term(m, c);
  }
  return quot;
}

// ------------------------------------------------------------------ printing

std::string term_to_string(const PolyRing& ring, const Term& t,
                           bool leading_position) {
  Rational a = t.coeff;
  std::string out;
  if (leading_position) {
    if (a < 0) {
      out += "-";
      a = -a;
    }
  } else {
    out += a < 0 ? " - " : " + ";
    if (a < 0) a = -a;
  }
  std::string vars;
  for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
    unsigned e = t.mono.exps[i];
    if (e == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += ring.var_name(i);
    if (e >= 2) vars += "^" + std::to_string(e);
  }
  if (vars.empty()) {
    out += rational_to_string(a);
  } else if (a == 1) {
    out += vars;
  } else {
    out += rational_to_string(a) + "*" + vars;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    out += term_to_string(ring_, terms_[i], i == 0);
  return out;
}

// ------------------------------------------------------------------- parsing

namespace {

struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error("polynomial parse error at offset " + std::to_string(pos) +
                ": " + msg);
  }
  unsigned long parse_nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
      ++pos;
    }
    return v;
  }
  std::string parse_ident() {
    skip_ws();
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected a variable name");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Polynomial Polynomial::parse(const PolyRing& ring, std::string_view text) {
  PolyLexer lex{text};
  Polynomial result(ring);
  bool first = true;
  while (true) {
    if (lex.done()) {
      if (first) lex.fail("empty polynomial");
      break;
    }
    Rational sign(1);
    if (lex.accept('-')) {
      sign = -1;
    } else if (lex.accept('+')) {
      // explicit plus
    } else if (!first) {
      lex.fail("expected '+' or '-' between terms");
    }
    // One term: '*'-joined factors, each a number or var(^nat).
    Rational coeff = sign;
    Monomial mono = mono_one(ring.arity());
    bool factor_expected = true;
    while (factor_expected) {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        unsigned long num = lex.parse_nat();
        if (lex.accept('/')) {
          unsigned long den = lex.parse_nat();
          if (den == 0) lex.fail("zero denominator");
          Rational q(static_cast<long>(num), static_cast<long>(den));
          q.canonicalize();
          coeff *= q;
        } else {
          coeff *= Rational(static_cast<long>(num));
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lex.parse_ident();
        auto idx = ring.var_index(name);
        if (!idx) lex.fail("unknown variable '" + name + "'");
        unsigned long e = 1;
        if (lex.accept('^')) e = lex.parse_nat();
        mono = mono_mul(mono, mono_var(ring.arity(), *idx,
                                       static_cast<unsigned>(e)));
      } else {
        lex.fail("expected a coefficient or variable");
      }
      factor_expected = lex.accept('*');
    }
    result += Polynomial::term(ring, mono, coeff);
    first = false;
  }
  return result;
}

}  // namespace doublekit
