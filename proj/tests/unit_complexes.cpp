// Chain complexes, exactness, chain maps, homotopies, and how all of them
// behave under doubling.
#include "doctest.h"

#include "doublekit/complexes.hpp"

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

// 0 -> R -[ -x2; x1 ]-> R^2 -[ x1 x2 ]-> <x1, x2> -> 0 over Q[x1,x2].
ChainComplex koszul_fragment(const PolyRing& r) {
  Submodule top = Submodule::full(r, 1);
  Submodule mid = Submodule::full(r, 2);
  Submodule bot(r, 1, {E(r, "(x1)"), E(r, "(x2)")});
  MatrixHom d2(top, mid, {{P(r, "-x2")}, {P(r, "x1")}});
  MatrixHom d1(mid, bot, {{P(r, "x1"), P(r, "x2")}});
  return ChainComplex(2, {top, mid, bot}, {d2, d1});
}

// 0 -> M -id-> M -> 0 with M = <gen> in Q[x]^1.
ChainComplex identity_complex(const Submodule& m) {
  return ChainComplex(1, {m, m}, {MatrixHom::identity(m)});
}

}  // namespace

TEST_CASE("complex shape bookkeeping") {
  PolyRing r({"x1", "x2"});
  ChainComplex c = koszul_fragment(r);
  CHECK(c.top_degree() == 2);
  CHECK(c.bottom_degree() == 0);
  CHECK(c.length() == 3);
  CHECK(c.in_range(1));
  CHECK_FALSE(c.in_range(3));
  CHECK(c.module_at(2).rank() == 1);
  CHECK(c.module_at(5).is_zero());  // outside the range: the zero module
  CHECK(c.diff_at(2).has_value());
  CHECK(c.diff_at(1).has_value());
  CHECK_FALSE(c.diff_at(0).has_value());  // leaves the range
  CHECK_FALSE(c.diff_at(3).has_value());
}

TEST_CASE("the Koszul fragment is a complex and the sign matters") {
  PolyRing r({"x1", "x2"});
  CHECK(is_complex(koszul_fragment(r)));

  // Flip one sign: x1*x2 + x2*x1 is no longer zero.
  Submodule top = Submodule::full(r, 1);
  Submodule mid = Submodule::full(r, 2);
  Submodule bot(r, 1, {E(r, "(x1)"), E(r, "(x2)")});
  MatrixHom broken_d2(top, mid, {{P(r, "x2")}, {P(r, "x1")}});
  MatrixHom d1(mid, bot, {{P(r, "x1"), P(r, "x2")}});
  CHECK_FALSE(is_complex(ChainComplex(2, {top, mid, bot}, {broken_d2, d1})));
}

TEST_CASE("complexes touching the zero module") {
  PolyRing r({"x"});
  Submodule z = Submodule::zero(r, 1);
  Submodule m(r, 1, {E(r, "(x)")});
  // 0 -> M -x-> full -> handled with explicit zero modules at the ends.
  ChainComplex c(2, {z, m, z}, {MatrixHom::zero(z, m), MatrixHom::zero(m, z)});
  CHECK(is_complex(c));
  CHECK_FALSE(is_exact_at(c, 1));  // homology M in the middle
  CHECK(is_exact_at(c, 2));
  CHECK(is_exact_everywhere(ChainComplex(0, {z}, {})));
}

TEST_CASE("exactness of the Koszul fragment") {
  PolyRing r({"x1", "x2"});
  ChainComplex c = koszul_fragment(r);
  CHECK(is_exact_at(c, 1));  // kernel of [x1 x2] = image of the Koszul map
  CHECK(is_exact_at(c, 2));  // the first map is injective
  CHECK(is_exact_at(c, 0));  // [x1 x2] surjects onto <x1, x2>
  CHECK(is_exact_everywhere(c));
}

TEST_CASE("a complex with zero differentials and nonzero middle is inexact") {
  PolyRing r({"x"});
  Submodule m(r, 1, {E(r, "(x)")});
  ChainComplex c(1, {m, m}, {MatrixHom::zero(m, m)});
  CHECK(is_complex(c));
  CHECK_FALSE(is_exact_at(c, 0));
  CHECK_FALSE(is_exact_everywhere(c));
}

TEST_CASE("exactness index bounds are errors") {
  PolyRing r({"x"});
  Submodule m(r, 1, {E(r, "(x)")});
  ChainComplex c(1, {m, m}, {MatrixHom::identity(m)});
  CHECK_THROWS_AS(is_exact_at(c, 7), Error);
}

TEST_CASE("doubling a complex preserves the complex law") {
  PolyRing r({"x1", "x2"});
  DoubleContext ctx(r);
  ChainComplex c = koszul_fragment(r);
  ChainComplex cd = double_complex(ctx, c);
  CHECK(is_complex(cd));
  CHECK(cd.top_degree() == c.top_degree());
  CHECK(cd.length() == c.length());
  CHECK(cd.module_at(1).rank() == 4);
  // The doubled Koszul fragment's exactness is recorded, not asserted:
  // compute it and require only the propagation implication.
  ExactnessReport rep = exactness_propagation_check(ctx, c);
  CHECK(rep.base_complex);
  CHECK(rep.doubled_complex);
  CHECK(rep.base_exact);
  CHECK(rep.implication_holds);
}

TEST_CASE("the doubled identity complex is exact at both spots") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule m(r, 1, {E(r, "(x)")});
  ChainComplex cd = double_complex(ctx, identity_complex(m));
  CHECK(is_complex(cd));
  CHECK(is_exact_at(cd, 1));
  CHECK(is_exact_at(cd, 0));
}

TEST_CASE("the double of the zero complex is zero") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule z = Submodule::zero(r, 1);
  ChainComplex c(0, {z, z}, {MatrixHom::zero(z, z)});
  ChainComplex cd = double_complex(ctx, c);
  CHECK(is_complex(cd));
  for (const auto& m : cd.modules()) CHECK(m.is_zero());
}

TEST_CASE("chain maps check their squares") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  // alpha = multiplication by x in both degrees commutes with d = x.
  MatrixHom by_x(full, full, {{P(r, "x")}});
  ChainMap alpha(c, c, {by_x, by_x});
  CHECK(is_chain_map(alpha));
  // Mismatched degrees break the square: x*d != d*x^2.
  MatrixHom by_x2(full, full, {{P(r, "x^2")}});
  ChainMap broken(c, c, {by_x, by_x2});
  CHECK_FALSE(is_chain_map(broken));
  CHECK(is_chain_map(identity_chain_map(c)));
  CHECK(is_chain_map(zero_chain_map(c, c)));
}

TEST_CASE("chain map equality is per-degree map equality") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  MatrixHom by_x(full, full, {{P(r, "x")}});
  ChainMap alpha(c, c, {by_x, by_x});
  CHECK(chain_map_eq(alpha, alpha));
  CHECK_FALSE(chain_map_eq(alpha, identity_chain_map(c)));
}

TEST_CASE("composition of chain maps composes degreewise") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  MatrixHom by_x(full, full, {{P(r, "x")}});
  ChainMap alpha(c, c, {by_x, by_x});
  ChainMap square = compose_chain_maps(alpha, alpha);
  auto comp = square.at(1);
  REQUIRE(comp.has_value());
  CHECK(comp->matrix()[0][0] == P(r, "x^2"));
}

TEST_CASE("doubling chain maps") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  MatrixHom by_x(full, full, {{P(r, "x")}});
  ChainMap alpha(c, c, {by_x, by_x});

  ChainMap alpha_d = double_chain_map(ctx, alpha);
  CHECK(is_chain_map(alpha_d));

  // The identity doubles to the identity.
  ChainMap id_d = double_chain_map(ctx, identity_chain_map(c));
  CHECK(chain_map_eq(id_d, identity_chain_map(alpha_d.source())));

  // The zero map doubles to the zero map.
  ChainMap zero_d = double_chain_map(ctx, zero_chain_map(c, c));
  CHECK(chain_map_eq(zero_d, zero_chain_map(alpha_d.source(), alpha_d.target())));

  // Doubling is multiplicative on composites.
  ChainMap both = double_chain_map(ctx, compose_chain_maps(alpha, alpha));
  ChainMap stepwise = compose_chain_maps(alpha_d, alpha_d);
  CHECK(chain_map_eq(both, stepwise));
}

TEST_CASE("tilde of the zero degree-one map is the zero chain map") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  DegreeOneMap mu(c, c, {MatrixHom::zero(full, full)});
  CHECK(chain_map_eq(tilde(mu), zero_chain_map(c, c)));
}

TEST_CASE("tilde of the evident contraction is the identity") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  ChainComplex c = identity_complex(full);
  // mu: degree 0 -> degree 1 the identity.  Then
  // tilde(mu)[1] = mu[0] . d[1] = id and tilde(mu)[0] = d[1] . mu[0] = id.
  DegreeOneMap mu(c, c, {MatrixHom::identity(full)});
  CHECK(chain_map_eq(tilde(mu), identity_chain_map(c)));
  CHECK(is_homotopy(identity_chain_map(c), zero_chain_map(c, c), mu));
}

TEST_CASE("tilde commutes with doubling") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  DegreeOneMap mu(c, c, {MatrixHom(full, full, {{P(r, "x^2 + 1")}})});
  ChainMap route_a = tilde(double_degree_one_map(ctx, mu));
  ChainMap route_b = double_chain_map(ctx, tilde(mu));
  // Matrix-level agreement, degree by degree.
  for (int deg = c.bottom_degree(); deg <= c.top_degree(); ++deg) {
    auto a = route_a.at(deg);
    auto b = route_b.at(deg);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->matrix() == b->matrix());
  }
}

TEST_CASE("homotopy detection") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  MatrixHom by_x(full, full, {{P(r, "x")}});
  ChainMap alpha(c, c, {by_x, by_x});
  // alpha = beta with the zero homotopy.
  DegreeOneMap zero_mu(c, c, {MatrixHom::zero(full, full)});
  CHECK(is_homotopy(alpha, alpha, zero_mu));
  // mu = identity gives tilde(mu) = multiplication by 2x? No: d = x, so
  // tilde(mu)[1] = id . x = x and tilde(mu)[0] = x . id = x; alpha - 0 has
  // components x, x, so mu = id witnesses alpha ~ 0.
  DegreeOneMap id_mu(c, c, {MatrixHom::identity(full)});
  CHECK(is_homotopy(alpha, zero_chain_map(c, c), id_mu));
  CHECK_FALSE(is_homotopy(identity_chain_map(c), zero_chain_map(c, c), zero_mu));
}

TEST_CASE("homotopies transfer to the double") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule full = Submodule::full(r, 1);
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  MatrixHom by_x(full, full, {{P(r, "x")}});
  ChainMap alpha(c, c, {by_x, by_x});
  DegreeOneMap id_mu(c, c, {MatrixHom::identity(full)});
  REQUIRE(is_homotopy(alpha, zero_chain_map(c, c), id_mu));
  ChainMap alpha_d = double_chain_map(ctx, alpha);
  ChainMap zero_d = double_chain_map(ctx, zero_chain_map(c, c));
  DegreeOneMap mu_d = double_degree_one_map(ctx, id_mu);
  CHECK(is_homotopy(alpha_d, zero_d, mu_d));
}

TEST_CASE("contractibility transfers to the double") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule full = Submodule::full(r, 1);
  ChainComplex c = identity_complex(full);
  DegreeOneMap mu(c, c, {MatrixHom::identity(full)});
  ContractibilityReport rep = contractibility_transfer(ctx, c, mu);
  CHECK(rep.witness_valid);
  CHECK(rep.doubled_valid);
}

TEST_CASE("contractibility transfer on a blockwise direct sum") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule full2 = Submodule::full(r, 2);
  // Direct sum of two copies of the 2-term identity complex: differentials
  // and contraction are both the 2x2 identity.
  ChainComplex c(1, {full2, full2}, {MatrixHom::identity(full2)});
  DegreeOneMap mu(c, c, {MatrixHom::identity(full2)});
  ContractibilityReport rep = contractibility_transfer(ctx, c, mu);
  CHECK(rep.witness_valid);
  CHECK(rep.doubled_valid);
}

TEST_CASE("a non-contraction is reported rather than thrown") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule full = Submodule::full(r, 1);
  // d = x is not contractible via mu = id (tilde(mu) = x != id).
  ChainComplex c(1, {full, full}, {MatrixHom(full, full, {{P(r, "x")}})});
  DegreeOneMap mu(c, c, {MatrixHom::identity(full)});
  ContractibilityReport rep = contractibility_transfer(ctx, c, mu);
  CHECK_FALSE(rep.witness_valid);
}

TEST_CASE("exactness propagation on the degenerate cases") {
  PolyRing r({"x"});
  DoubleContext ctx(r);
  Submodule z = Submodule::zero(r, 1);
  ChainComplex zero_c(0, {z, z}, {MatrixHom::zero(z, z)});
  ExactnessReport rep = exactness_propagation_check(ctx, zero_c);
  CHECK(rep.base_exact);
  CHECK(rep.doubled_exact);
  CHECK(rep.implication_holds);

  ChainComplex id_c = identity_complex(Submodule::full(r, 1));
  ExactnessReport rep2 = exactness_propagation_check(ctx, id_c);
  CHECK(rep2.base_exact);
  CHECK(rep2.doubled_exact);
  CHECK(rep2.implication_holds);
}

TEST_CASE("shape violations throw at construction") {
  PolyRing r({"x"});
  Submodule full = Submodule::full(r, 1);
  Submodule full2 = Submodule::full(r, 2);
  CHECK_THROWS_AS(ChainComplex(1, {full, full2},
                               {MatrixHom::identity(full)}),
                  Error);
  ChainComplex c = identity_complex(full);
  ChainComplex c2(1, {full2, full2}, {MatrixHom::identity(full2)});
  CHECK_THROWS_AS(ChainMap(c, c2, {MatrixHom::identity(full),
                                   MatrixHom::identity(full)}),
                  Error);
}
