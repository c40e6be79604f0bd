// Doubles along a germ of a map: the tensor pullback, generator-image
// homomorphisms with their well-definedness check, and relative doubles.
#include "doctest.h"

#include "doublekit/relative.hpp"

#include <string>
#include <vector>

using namespace doublekit;

namespace {

Polynomial P(const PolyRing& r, const std::string& text) {
  return Polynomial::parse(r, text);
}
ModuleElement E(const PolyRing& r, const std::string& text) {
  return ModuleElement::parse(r, text);
}

// The plane curve parametrization t -> (t^2, t^3): source ring Q[x1,x2],
// target ring Q[t] doubled with explicit copy names (s, t).
RelativeMap cusp_map() {
  PolyRing rx({"x1", "x2"});
  PolyRing ry({"t"});
  DoubleContext ctx_x(rx);
  DoubleContext ctx_y(ry, {"s"}, {"t"});
  RingMorphism pullback(rx, ry, {P(ry, "t^2"), P(ry, "t^3")});
  return RelativeMap(ctx_x, ctx_y, pullback);
}

// The line germ x -> t^2: source Q[x], target Q[t], copies (s, t).
RelativeMap line_map() {
  PolyRing rx({"x"});
  PolyRing ry({"t"});
  DoubleContext ctx_x(rx);
  DoubleContext ctx_y(ry, {"s"}, {"t"});
  RingMorphism pullback(rx, ry, {P(ry, "t^2")});
  return RelativeMap(ctx_x, ctx_y, pullback);
}

}  // namespace

TEST_CASE("the tensor pullback doubles the substitution copy-wise") {
  RelativeMap rel = cusp_map();
  const PolyRing& sx = rel.context_x().doubled();  // Q[x1,x2,y1,y2]
  const PolyRing& sy = rel.context_y().doubled();  // Q[s,t]
  CHECK(phi_tensor(rel, P(sx, "x1 - y1")) == P(sy, "s^2 - t^2"));
  CHECK(phi_tensor(rel, P(sx, "x2")) == P(sy, "s^3"));
  CHECK(phi_tensor(rel, P(sx, "y2")) == P(sy, "t^3"));
  CHECK(phi_tensor(rel, P(sx, "7")) == P(sy, "7"));
  CHECK(phi_tensor(rel, Polynomial::zero(sx)).is_zero());
}

TEST_CASE("the tensor pullback restricts to the pullback on each copy") {
  RelativeMap rel = cusp_map();
  const PolyRing& rx = rel.context_x().base();
  for (const std::string text : {"x1", "x2", "x1^2 - x2", "x1*x2 + 1"}) {
    Polynomial p = P(rx, text);
    // First copy: pi1 then tensor equals pullback then pi1.
    CHECK(phi_tensor(rel, rel.context_x().pi1()(p)) ==
          rel.context_y().pi1()(rel.pullback()(p)));
    // Second copy likewise.
    CHECK(phi_tensor(rel, rel.context_x().pi2()(p)) ==
          rel.context_y().pi2()(rel.pullback()(p)));
  }
}

TEST_CASE("the cusp relation dies under the pullback") {
  RelativeMap rel = cusp_map();
  const PolyRing& rx = rel.context_x().base();
  CHECK(rel.pullback()(P(rx, "x1^3 - x2^2")).is_zero());
}

TEST_CASE("fixing the second slot commutes with pulling back") {
  RelativeMap rel = cusp_map();
  const PolyRing& sx = rel.context_x().doubled();
  for (const std::string text :
       {"x1*y1", "x1 - y1", "x1^2*y2 + x2", "y1*y2", "3"}) {
    CHECK(two_route_slot_identity(rel, P(sx, text)));
  }
}

TEST_CASE("relative maps compose") {
  // Chain Q[u] -> Q[x] -> Q[t]: u -> x^2 -> t^4 through x -> t^2.
  PolyRing ru({"u"});
  PolyRing rx({"x"});
  PolyRing rt({"t"});
  DoubleContext ctx_u(ru, {"su"}, {"u"});
  DoubleContext ctx_x(rx);
  DoubleContext ctx_t(rt, {"s"}, {"t"});
  RelativeMap first(ctx_u, ctx_x, RingMorphism(ru, rx, {P(rx, "x^2")}));
  RelativeMap second(ctx_x, ctx_t, RingMorphism(rx, rt, {P(rt, "t^2")}));
  RelativeMap both = compose_relative(first, second);
  CHECK(both.pullback()(P(ru, "u")) == P(rt, "t^4"));
  // The composite tensor pullback equals the composition of the two.
  const PolyRing& su = ctx_u.doubled();
  Polynomial alpha = P(su, "su^2 - u");
  CHECK(phi_tensor(both, alpha) ==
        phi_tensor(second, phi_tensor(first, alpha)));
}

TEST_CASE("generator-image homs check the codomain and the relations") {
  RelativeMap rel = line_map();
  const PolyRing& rx = rel.context_x().base();
  const PolyRing& ry = rel.context_y().base();
  Submodule m(rx, 1, {E(rx, "(x)")});
  Submodule n(ry, 1, {E(ry, "(t^2)")});
  GeneratorImageHom phi(rel, m, n, {E(ry, "(t^2)")});
  CHECK(phi.apply(E(rx, "(x^2)")) == E(ry, "(t^4)"));
  CHECK(phi.apply(E(rx, "(x)")) == E(ry, "(t^2)"));
  // An image outside the codomain is rejected.
  CHECK_THROWS_AS(GeneratorImageHom(rel, m, n, {E(ry, "(t)")}), Error);
}

TEST_CASE("a syzygy violation is rejected at construction") {
  RelativeMap rel = line_map();
  const PolyRing& rx = rel.context_x().base();
  const PolyRing& ry = rel.context_y().base();
  // Domain <x, x^2> carries the relation x*g1 - g2 = 0; the images t^2,
  // t^5 would need t^2*t^2 = t^5, which fails.
  Submodule m(rx, 1, {E(rx, "(x)"), E(rx, "(x^2)")});
  Submodule n = Submodule::full(ry, 1);
  CHECK_THROWS_WITH_AS(
      GeneratorImageHom(rel, m, n, {E(ry, "(t^2)"), E(ry, "(t^5)")}),
      "generator images do not define a homomorphism: a relation among "
      "the generators is not preserved",
      Error);
  // Consistent images pass: t^2, t^4 satisfies t^2*t^2 = t^4.
  GeneratorImageHom ok(rel, m, n, {E(ry, "(t^2)"), E(ry, "(t^4)")});
  CHECK(ok.apply(E(rx, "(x^3)")) == E(ry, "(t^6)"));
}

TEST_CASE("the relative double acts by the defining identity") {
  RelativeMap rel = line_map();
  const PolyRing& rx = rel.context_x().base();
  const PolyRing& ry = rel.context_y().base();
  Submodule m(rx, 1, {E(rx, "(x)")});
  Submodule n(ry, 1, {E(ry, "(t^2)")});
  GeneratorImageHom phi(rel, m, n, {E(ry, "(t^2)")});
  RelativeDoubledHom phi_d = relative_double_hom(phi);

  // Assignments on the structural generators of the doubled domain.
  REQUIRE(phi_d.assignments().size() == 2);
  CHECK(phi_d.assignments()[0].to_string() == "(s^2, t^2)");
  CHECK(phi_d.assignments()[1].to_string() == "(0, -s^2*t^2 + t^4)");

  // The worked instance: h = x^2, h_D = (x^2, y^2) maps to (s^4, t^4).
  const PolyRing& sx = rel.context_x().doubled();
  ModuleElement hd = E(sx, "(x^2, y^2)");
  CHECK(phi_d.apply(hd).to_string() == "(s^4, t^4)");

  // The identity phi_D(h_D) = (phi(h))_D on a spread of members.
  const DoubleContext& cy = rel.context_y();
  const DoubleContext& cx = rel.context_x();
  for (const std::string text : {"(x)", "(x^2)", "(x^3 + x)", "(0)"}) {
    ModuleElement h = E(rx, text);
    CHECK(phi_d.apply(double_element(cx, h)) ==
          double_element(cy, phi.apply(h)));
  }
}

TEST_CASE("the cusp relative double on the maximal ideal") {
  RelativeMap rel = cusp_map();
  const PolyRing& rx = rel.context_x().base();
  const PolyRing& ry = rel.context_y().base();
  Submodule m(rx, 1, {E(rx, "(x1)"), E(rx, "(x2)")});
  Submodule n(ry, 1, {E(ry, "(t^2)")});
  GeneratorImageHom phi(rel, m, n, {E(ry, "(t^2)"), E(ry, "(t^3)")});
  RelativeDoubledHom phi_d = relative_double_hom(phi);
  // Two doubled generators plus 2 generators x 2 variables auxiliaries.
  CHECK(phi_d.assignments().size() == 6);
  const DoubleContext& cx = rel.context_x();
  const DoubleContext& cy = rel.context_y();
  for (const std::string text :
       {"(x1)", "(x2)", "(x1^2 + x2)", "(x1*x2)", "(0)"}) {
    ModuleElement h = E(rx, text);
    CHECK(phi_d.apply(double_element(cx, h)) ==
          double_element(cy, phi.apply(h)));
  }
}

TEST_CASE("relative doubles compose along composed germs") {
  PolyRing ru({"u"});
  PolyRing rx({"x"});
  PolyRing rt({"t"});
  DoubleContext ctx_u(ru, {"su"}, {"u"});
  DoubleContext ctx_x(rx);
  DoubleContext ctx_t(rt, {"s"}, {"t"});
  RelativeMap first(ctx_u, ctx_x, RingMorphism(ru, rx, {P(rx, "x^2")}));
  RelativeMap second(ctx_x, ctx_t, RingMorphism(rx, rt, {P(rt, "t^2")}));
  RelativeMap both = compose_relative(first, second);

  Submodule dom(ru, 1, {E(ru, "(u)")});
  Submodule mid(rx, 1, {E(rx, "(x^2)")});
  Submodule cod(rt, 1, {E(rt, "(t^4)")});
  GeneratorImageHom f(first, dom, mid, {E(rx, "(x^2)")});
  GeneratorImageHom g(second, mid, cod, {E(rt, "(t^4)")});
  GeneratorImageHom gf = compose_generator_image(g, f);

  RelativeDoubledHom direct = relative_double_hom(gf);
  RelativeDoubledHom f_d = relative_double_hom(f);
  RelativeDoubledHom g_d = relative_double_hom(g);
  // Compare on every structural generator of the doubled domain.
  const Submodule& dd = direct.domain_double().value();
  for (const auto& gen : dd.generators()) {
    CHECK(direct.apply(gen) == g_d.apply(f_d.apply(gen)));
  }
  // And on a doubled member picked by hand.
  const DoubleContext& cu = ctx_u;
  ModuleElement h = E(ru, "(u^2)");
  CHECK(direct.apply(double_element(cu, h)) ==
        g_d.apply(f_d.apply(double_element(cu, h))));
}

TEST_CASE("the identity germ reduces the relative double to the plain one") {
  PolyRing rx({"x"});
  DoubleContext ctx(rx);
  RelativeMap rel(ctx, ctx, RingMorphism::identity(rx));
  Submodule m(rx, 1, {E(rx, "(x)")});
  GeneratorImageHom phi(rel, m, m, {E(rx, "(x^2)")});  // mult by x
  RelativeDoubledHom phi_d = relative_double_hom(phi);
  MatrixHom plain(m, m, {{P(rx, "x")}});
  DoubledHom plain_d = double_matrix_hom(ctx, plain);
  for (const auto& gen : phi_d.domain_double().value().generators()) {
    CHECK(phi_d.apply(gen) == plain_d.value().apply(gen));
  }
}
