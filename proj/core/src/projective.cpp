#include "holoconn/projective.hpp"

#include "holoconn/errors.hpp"

namespace holoconn {

GeodesicOde geodesic_ode(const Connection& c) {
  if (!c.is_torsion_free())
    throw NotTorsionFree("geodesic ODE extraction presumes a torsion-free connection");
  return GeodesicOde{
      -c.gamma(2, 1, 1),
      c.gamma(1, 1, 1) - Expr(2) * c.gamma(2, 1, 2),
      Expr(2) * c.gamma(1, 1, 2) - c.gamma(2, 2, 2),
      c.gamma(1, 2, 2),
  };
}

LiouvillePair liouville_invariants(const GeodesicOde& ode) {
  const Expr &k0 = ode.k0, &k1 = ode.k1, &k2 = ode.k2, &k3 = ode.k3;
  auto d1 = [](const Expr& e) { return diff(e, 1); };
  auto d2 = [](const Expr& e) { return diff(e, 2); };

  Expr l1 = Expr(2) * d2(d1(k1)) - d1(d1(k2)) - Expr(3) * d2(d2(k0)) -
            Expr(6) * k0 * d1(k3) - Expr(3) * k3 * d1(k0) +
            Expr(3) * k0 * d2(k2) + Expr(3) * k2 * d2(k0) + k1 * d1(k2) -
            Expr(2) * k1 * d2(k1);

  Expr l2 = Expr(2) * d2(d1(k2)) - d2(d2(k1)) - Expr(3) * d1(d1(k3)) +
            Expr(6) * k3 * d2(k0) + Expr(3) * k0 * d2(k3) -
            Expr(3) * k3 * d1(k1) - Expr(3) * k1 * d1(k3) - k2 * d2(k1) +
            Expr(2) * k2 * d1(k2);

  return LiouvillePair{l1, l2};
}

bool is_projectively_flat(const Connection& c) {
  return liouville_invariants(geodesic_ode(c)).both_zero();
}

std::optional<OneForm> trace_decompose(const DiffTensor& w) {
  if (!w.is_symmetric())
    throw NotSymmetric("trace decomposition requires lower-slot symmetry");
  // In dimension two the pure-trace ansatz expands to
  //   w^1_{11} = 2 phi1, w^1_{12} = phi2, w^1_{22} = 0,
  //   w^2_{11} = 0, w^2_{12} = phi1, w^2_{22} = 2 phi2.
  if (!w.omega(1, 2, 2).is_zero() || !w.omega(2, 1, 1).is_zero())
    return std::nullopt;
  Expr phi1 = w.omega(2, 1, 2);
  Expr phi2 = w.omega(1, 1, 2);
  if (!(w.omega(1, 1, 1) - Expr(2) * phi1).is_zero()) return std::nullopt;
  if (!(w.omega(2, 2, 2) - Expr(2) * phi2).is_zero()) return std::nullopt;
  return OneForm{phi1, phi2};
}

}  // namespace holoconn
