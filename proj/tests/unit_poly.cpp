// Exact arithmetic, the monomial order, parsing/printing, and substitution.
#include "doctest.h"

#include "doublekit/polynomial.hpp"
#include "doublekit/morphism.hpp"
#include "doublekit/verifier.hpp"

#include <string>
#include <vector>

using namespace doublekit;

namespace {

PolyRing ring_x() { return PolyRing({"x"}); }
PolyRing ring_xy() { return PolyRing({"x", "y"}); }
PolyRing ring_xyz() { return PolyRing({"x", "y", "z"}); }

Polynomial P(const PolyRing& r, const std::string& text) {
  return Polynomial::parse(r, text);
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational_to_string(rational(2, 4)) == "1/2");
  CHECK(rational_to_string(rational(-6, 3)) == "-2");
  CHECK(rational_to_string(rational(0)) == "0");
  CHECK(is_integer(rational(8, 2)));
  CHECK_FALSE(is_integer(rational(1, 3)));
}

TEST_CASE("monomial order is graded reverse lexicographic") {
  auto r = ring_xyz();
  auto m = [&](unsigned a, unsigned b, unsigned c) {
    Monomial out = mono_one(3);
    out.exps = {a, b, c};
    out.degree = a + b + c;
    return out;
  };
  // Degree dominates.
  CHECK(grevlex_cmp(m(3, 0, 0), m(1, 1, 0)) > 0);
  // The standard degree-2 chain in three variables:
  // x^2 > xy > y^2 > xz > yz > z^2.
  std::vector<Monomial> chain = {m(2, 0, 0), m(1, 1, 0), m(0, 2, 0),
                                 m(1, 0, 1), m(0, 1, 1), m(0, 0, 2)};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(grevlex_cmp(chain[i], chain[i + 1]) > 0);
    CHECK(grevlex_cmp(chain[i + 1], chain[i]) < 0);
  }
  CHECK(grevlex_cmp(m(1, 1, 0), m(1, 1, 0)) == 0);
}

TEST_CASE("monomial helpers") {
  Monomial a = mono_var(2, 0, 2);           // x^2
  Monomial b = mono_var(2, 1, 3);           // y^3
  Monomial prod = mono_mul(a, b);           // x^2 y^3
  CHECK(prod.degree == 5);
  CHECK(mono_divides(a, prod));
  CHECK_FALSE(mono_divides(prod, a));
  CHECK(mono_div(prod, a) == b);
  CHECK(mono_lcm(a, b) == prod);
  CHECK(mono_is_one(mono_one(2)));
  CHECK(mono_pure_power(a).has_value());
  CHECK(*mono_pure_power(a) == 0);
  CHECK_FALSE(mono_pure_power(prod).has_value());
  CHECK_FALSE(mono_pure_power(mono_one(2)).has_value());
}

TEST_CASE("difference of squares") {
  auto r = ring_xy();
  CHECK((P(r, "x + y") * P(r, "x - y")) == P(r, "x^2 - y^2"));
}

TEST_CASE("multiplicative identity and simple products") {
  auto r = ring_xy();
  Polynomial p = P(r, "3*x^2*y - 1/2*y + 7");
  CHECK(p * Polynomial::constant(r, rational(1)) == p);
  CHECK(P(r, "x") * P(r, "x") == P(r, "x^2"));
}

TEST_CASE("zero and constant polynomials") {
  auto r = ring_x();
  CHECK(Polynomial::zero(r).is_zero());
  CHECK(Polynomial::constant(r, rational(0)).is_zero());
  CHECK(Polynomial::constant(r, rational(5)).is_constant());
  CHECK_FALSE(P(r, "x + 1").is_constant());
  CHECK(P(r, "x").total_degree() == 1);
  CHECK(Polynomial::zero(r).total_degree() == 0);
}

TEST_CASE("canonical printing") {
  auto r = ring_xy();
  CHECK(P(r, "y + x").to_string() == "x + y");
  CHECK(P(r, "x*x*x").to_string() == "x^3");
  CHECK(P(r, "0").to_string() == "0");
  CHECK(P(r, "2*x - 3*y").to_string() == "2*x - 3*y");
  CHECK(P(r, "1/2*x^2 + 1").to_string() == "1/2*x^2 + 1");
  CHECK(P(r, "-x").to_string() == "-x");
  CHECK(P(r, "x - x").to_string() == "0");
  // Terms in strictly decreasing grevlex order.
  CHECK(P(r, "y^2 + x^2 + x*y").to_string() == "x^2 + x*y + y^2");
}

TEST_CASE("parse prints back to itself") {
  auto r = ring_xy();
  for (const std::string text :
       {"x^2 + x*y + y^2", "2*x - 3*y", "1/2*x^2 + 1", "0", "-x + 1",
        "x^3*y^2 - 7/3"}) {
    CHECK(P(r, text).to_string() == text);
  }
}

TEST_CASE("round trip on random polynomials") {
  auto r = ring_xyz();
  SplitMix64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    std::vector<Term> terms;
    unsigned count = 1 + rng.below(4);
    for (unsigned k = 0; k < count; ++k) {
      Monomial m = mono_one(3);
      unsigned deg = 0;
      for (auto& e : m.exps) {
        e = static_cast<unsigned>(rng.below(4));
        deg += e;
      }
      m.degree = deg;
      long num = static_cast<long>(rng.range(-9, 9));
      long den = 1 + static_cast<long>(rng.below(4));
      if (num != 0) terms.push_back({m, rational(num, den)});
    }
    Polynomial p = Polynomial::from_terms(r, terms);
    CHECK(Polynomial::parse(r, p.to_string()) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = ring_xy();
  SplitMix64 rng(7);
  auto rand_poly = [&]() {
    std::vector<Term> terms;
    unsigned count = rng.below(4);
    for (unsigned k = 0; k < count; ++k) {
      Monomial m = mono_one(2);
      unsigned deg = 0;
      for (auto& e : m.exps) {
        e = static_cast<unsigned>(rng.below(3));
        deg += e;
      }
      m.degree = deg;
      terms.push_back({m, rational(static_cast<long>(rng.range(-5, 5)))});
    }
    return Polynomial::from_terms(r, terms);
  };
  for (int t = 0; t < 100; ++t) {
    Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial::zero(r));
    CHECK(a + Polynomial::zero(r) == a);
  }
}

TEST_CASE("power and scaling") {
  auto r = ring_x();
  CHECK(P(r, "x + 1").pow(2) == P(r, "x^2 + 2*x + 1"));
  CHECK(P(r, "x").pow(0) == Polynomial::constant(r, rational(1)));
  CHECK(P(r, "2*x").scaled(rational(1, 2)) == P(r, "x"));
  CHECK(P(r, "x + 1").times_term(mono_var(1, 0), rational(3)) ==
        P(r, "3*x^2 + 3*x"));
}

TEST_CASE("exact division") {
  auto r = ring_xy();
  Polynomial q = P(r, "x^2 - y^2").divide_exact(P(r, "x - y"));
  CHECK(q == P(r, "x + y"));
  CHECK_THROWS_AS(P(r, "x^2 + 1").divide_exact(P(r, "x - y")), Error);
  CHECK_THROWS_AS(P(r, "x").divide_exact(Polynomial::zero(r)), Error);
}

TEST_CASE("substitution morphism on one variable") {
  PolyRing src({"x"});
  PolyRing dst({"t"});
  RingMorphism f(src, dst, {P(dst, "t^2")});
  CHECK(f(P(src, "x^3")) == P(dst, "t^6"));
  CHECK(f(P(src, "x + 1")) == P(dst, "t^2 + 1"));
  CHECK(f(Polynomial::zero(src)).is_zero());
}

TEST_CASE("identity morphism") {
  auto r = ring_xy();
  RingMorphism id = RingMorphism::identity(r);
  Polynomial p = P(r, "x^2*y - 3*y + 1/2");
  CHECK(id(p) == p);
}

TEST_CASE("substitution kills the defining relation of the cusp") {
  PolyRing src({"x1", "x2"});
  PolyRing dst({"t"});
  RingMorphism f(src, dst, {P(dst, "t^2"), P(dst, "t^3")});
  // x1^3 - x2^2 maps to t^6 - t^6 = 0.
  CHECK(f(P(src, "x1^3 - x2^2")).is_zero());
}

TEST_CASE("morphisms are ring homomorphisms on random inputs") {
  PolyRing src({"x", "y"});
  PolyRing dst({"t"});
  RingMorphism f(src, dst, {P(dst, "t^2"), P(dst, "t + 1")});
  SplitMix64 rng(99);
  auto rand_poly = [&]() {
    std::vector<Term> terms;
    unsigned count = rng.below(4);
    for (unsigned k = 0; k < count; ++k) {
      Monomial m = mono_one(2);
      unsigned deg = 0;
      for (auto& e : m.exps) {
        e = static_cast<unsigned>(rng.below(3));
        deg += e;
      }
      m.degree = deg;
      terms.push_back({m, rational(static_cast<long>(rng.range(-4, 4)))});
    }
    return Polynomial::from_terms(src, terms);
  };
  for (int t = 0; t < 100; ++t) {
    Polynomial a = rand_poly(), b = rand_poly();
    CHECK(f(a + b) == f(a) + f(b));
    CHECK(f(a * b) == f(a) * f(b));
  }
}

TEST_CASE("morphism composition") {
  PolyRing a({"x"});
  PolyRing b({"u"});
  PolyRing c({"t"});
  RingMorphism f(a, b, {P(b, "u^2")});
  RingMorphism g(b, c, {P(c, "t + 1")});
  RingMorphism gf = g.after(f);
  CHECK(gf.source() == a);
  CHECK(gf.target() == c);
  CHECK(gf(P(a, "x")) == P(c, "t^2 + 2*t + 1"));
  CHECK(gf(P(a, "x^2")) == g(f(P(a, "x^2"))));
}

TEST_CASE("ring mismatch is an error") {
  auto r = ring_x();
  auto s = ring_xy();
  CHECK_THROWS_AS(P(r, "x") + P(s, "x"), Error);
  CHECK_THROWS_AS(P(r, "x") * P(s, "y"), Error);
}

TEST_CASE("parse rejects malformed input") {
  auto r = ring_xy();
  CHECK_THROWS_AS(Polynomial::parse(r, "x +"), Error);
  CHECK_THROWS_AS(Polynomial::parse(r, "z"), Error);     // unknown variable
  CHECK_THROWS_AS(Polynomial::parse(r, "x^"), Error);
  CHECK_THROWS_AS(Polynomial::parse(r, ""), Error);
}

TEST_CASE("ring equality is by variable lists") {
  CHECK(PolyRing({"x", "y"}) == PolyRing({"x", "y"}));
  CHECK(PolyRing({"x", "y"}) != PolyRing({"y", "x"}));
  CHECK(PolyRing({"x"}) != PolyRing({"x", "y"}));
  PolyRing r({"a", "b"});
  CHECK(r.arity() == 2);
  CHECK(r.var_name(1) == "b");
  CHECK(r.var_index("a").has_value());
  CHECK_FALSE(r.var_index("c").has_value());
}
