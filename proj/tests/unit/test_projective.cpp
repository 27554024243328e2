#include <doctest.h>

#include "holoconn/errors.hpp"
#include "holoconn/families.hpp"
#include "holoconn/projective.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace holoconn;
using holoconn::testing::Rng;

namespace {
const Expr z = Expr::variable(1);
const Expr xi = Expr::variable(2);

bool expr_eq(const Expr& a, const Expr& b) { return (a - b).is_zero(); }
}  // namespace

TEST_CASE("geodesic ODE of the standard connection is trivial") {
  GeodesicOde ode = geodesic_ode(Connection::standard());
  CHECK(ode.k0.is_zero());
  CHECK(ode.k1.is_zero());
  CHECK(ode.k2.is_zero());
  CHECK(ode.k3.is_zero());
}

TEST_CASE("geodesic ODE of the elliptic family") {
  // Direct substitution of the total Christoffels into the coefficient
  // dictionary. K1 = -1 comes from the reference-shift part of the table.
  Expr f = xi, g22 = xi.pow(2), g12 = xi + Expr(1);
  GeodesicOde ode = geodesic_ode(elliptic_family(EllipticFamilyData(f, g22, g12)));
  CHECK(ode.k0.is_zero());
  CHECK(expr_eq(ode.k1, Expr(-1)));
  CHECK(expr_eq(ode.k2, Expr(2) * f - g22));
  CHECK(expr_eq(ode.k3, g12));
}

TEST_CASE("constant connections give constant coefficients") {
  Rng rng(41);
  for (int n = 0; n < 10; ++n) {
    TranslationInvariantData d = rng.translation_data(-3, 3);
    GeodesicOde ode = geodesic_ode(translation_invariant(d));
    CHECK(ode.k0.is_constant());
    CHECK(ode.k1.is_constant());
    CHECK(ode.k2.is_constant());
    CHECK(ode.k3.is_constant());
  }
}

TEST_CASE("geodesic ODE requires torsion-free input") {
  Connection c;
  c.set_gamma(2, 1, 2, Expr(1));
  CHECK_THROWS_AS(geodesic_ode(c), NotTorsionFree);
  CHECK_THROWS_AS(is_projectively_flat(c), NotTorsionFree);
}

TEST_CASE("Liouville invariants vanish in the published cases") {
  // all coefficients zero
  GeodesicOde trivial{Expr(0), Expr(0), Expr(0), Expr(0)};
  LiouvillePair l = liouville_invariants(trivial);
  CHECK(l.both_zero());

  // K0 = K1 = 0, K2 and K3 functions of the second variable only
  GeodesicOde fam{Expr(0), Expr(0), Expr(2) * xi - xi.pow(2), xi.pow(3)};
  CHECK(liouville_invariants(fam).both_zero());

  // all coefficients constant
  GeodesicOde c{Expr(3), Expr(-2), Expr(Scalar(1, 2)), Expr(5)};
  CHECK(liouville_invariants(c).both_zero());
}

TEST_CASE("Liouville invariants match the independent coding") {
  Rng rng(43);
  for (int n = 0; n < 12; ++n) {
    GeodesicOde ode{rng.polynomial_expr(2, 3), rng.polynomial_expr(2, 3),
                    rng.polynomial_expr(2, 3), rng.polynomial_expr(2, 3)};
    LiouvillePair a = liouville_invariants(ode);
    LiouvillePair b = holoconn::testing::liouville_reference(ode);
    CHECK(expr_eq(a.l1, b.l1));
    CHECK(expr_eq(a.l2, b.l2));
  }
}

TEST_CASE("swapping the chart variables dualizes the ODE and the invariants") {
  // The dual ODE has coefficients K~i = -K^(3-i) with the variables swapped;
  // its invariants are (-L2, -L1) with the variables swapped.
  Rng rng(47);
  auto swapped = [](const Expr& e) {
    // simultaneous z <-> xi, done by flipping the exponents of every monomial
    auto flip = [](const Polynomial& p) {
      Polynomial out;
      for (const auto& [m, c] : p.terms()) out.add_term(Monomial{m.q, m.p}, c);
      return out;
    };
    return Expr(flip(e.num()), flip(e.den()));
  };
  for (int n = 0; n < 10; ++n) {
    GeodesicOde ode{rng.polynomial_expr(2, 2), rng.polynomial_expr(2, 2),
                    rng.polynomial_expr(2, 2), rng.polynomial_expr(2, 2)};
    GeodesicOde dual{-swapped(ode.k3), -swapped(ode.k2), -swapped(ode.k1),
                     -swapped(ode.k0)};
    LiouvillePair direct = liouville_invariants(ode);
    LiouvillePair dual_inv = holoconn::testing::liouville_reference(dual);
    CHECK(expr_eq(dual_inv.l1, -swapped(direct.l2)));
    CHECK(expr_eq(dual_inv.l2, -swapped(direct.l1)));
  }
}

TEST_CASE("projective flatness of the families") {
  Rng rng(53);
  for (int n = 0; n < 8; ++n) {
    CHECK(is_projectively_flat(elliptic_family(rng.elliptic_data(3, true))));
    CHECK(is_projectively_flat(translation_invariant(rng.translation_data(-2, 2))));
  }
}

TEST_CASE("a non projectively flat witness and a linear-ODE counterpoint") {
  // Gamma^2_{11} = xi^2 gives K0 = -xi^2 and L1 = -3 K0_xixi = 6 != 0.
  Connection c;
  c.set_gamma(2, 1, 1, xi.pow(2));
  CHECK_FALSE(is_projectively_flat(c));
  LiouvillePair l = liouville_invariants(geodesic_ode(c));
  CHECK(expr_eq(l.l1, Expr(6)));

  // Gamma^2_{11} = z*xi yields the linear equation x'' = -z x, which point
  // transformations do trivialize: both invariants vanish identically.
  Connection lin;
  lin.set_gamma(2, 1, 1, z * xi);
  CHECK(is_projectively_flat(lin));
}

TEST_CASE("trace decomposition: construction inverted, zero, obstructed") {
  DiffTensor w = holoconn::testing::pure_trace_tensor(OneForm{Expr(1), Expr(0)});
  CHECK((w.omega(1, 1, 1) - Expr(2)).is_zero());
  auto phi = trace_decompose(w);
  REQUIRE(phi.has_value());
  CHECK(expr_eq(phi->phi1, Expr(1)));
  CHECK(phi->phi2.is_zero());

  auto zero = trace_decompose(DiffTensor{});
  REQUIRE(zero.has_value());
  CHECK(zero->phi1.is_zero());
  CHECK(zero->phi2.is_zero());

  DiffTensor bad;
  bad.set_omega(2, 1, 1, Expr(1));
  CHECK_FALSE(trace_decompose(bad).has_value());

  DiffTensor asym;
  asym.set_omega(1, 1, 2, Expr(1));
  CHECK_THROWS_AS(trace_decompose(asym), NotSymmetric);
}

TEST_CASE("trace decomposition agrees with the brute-force oracle") {
  Rng rng(59);
  for (int n = 0; n < 20; ++n) {
    DiffTensor w;
    if (rng.chance(0.5)) {
      w = holoconn::testing::pure_trace_tensor(
          OneForm{rng.polynomial_expr(2, 2), rng.polynomial_expr(2, 2)});
    } else {
      for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 2; ++i)
          for (int j = 1; j <= i; ++j) {
            Expr e = rng.polynomial_expr(2, 2);
            w.set_omega(k, i, j, e);
            w.set_omega(k, j, i, e);
          }
    }
    auto got = trace_decompose(w);
    auto expected = holoconn::testing::trace_decompose_reference(w);
    CHECK(got.has_value() == expected.has_value());
    if (got && expected) {
      CHECK(expr_eq(got->phi1, expected->phi1));
      CHECK(expr_eq(got->phi2, expected->phi2));
    }
  }
}

TEST_CASE("pure-trace shifts preserve the geodesic ODE and flatness verdicts") {
  Rng rng(61);
  for (int n = 0; n < 8; ++n) {
    Connection c = translation_invariant(rng.translation_data(-2, 2));
    DiffTensor w = holoconn::testing::pure_trace_tensor(
        OneForm{rng.polynomial_expr(2, 2), rng.polynomial_expr(2, 2)});
    Connection shifted = add(c, w);
    REQUIRE(trace_decompose(difference(shifted, c)).has_value());
    CHECK(geodesic_ode(shifted) == geodesic_ode(c));
    CHECK(is_projectively_flat(shifted) == is_projectively_flat(c));
  }
}
