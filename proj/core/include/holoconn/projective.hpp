#pragma once

#include <optional>

#include "holoconn/connection.hpp"

namespace holoconn {

/// Coefficients of the geodesic second-order ODE
///   x2'' = K0 + K1 x2' + K2 (x2')^2 + K3 (x2')^3
/// obtained by eliminating the affine parameter, with the second chart
/// variable as the dependent one.
struct GeodesicOde {
  Expr k0, k1, k2, k3;

  friend bool operator==(const GeodesicOde& a, const GeodesicOde& b) {
    return a.k0 == b.k0 && a.k1 == b.k1 && a.k2 == b.k2 && a.k3 == b.k3;
  }
};

/// The two Liouville point invariants of a cubic-in-slope second-order ODE.
/// Both vanish identically iff the underlying projective connection is flat.
struct LiouvillePair {
  Expr l1, l2;

  bool both_zero() const { return l1.is_zero() && l2.is_zero(); }
};

/// One-form witnessing projective equivalence via a pure-trace difference
/// tensor.
struct OneForm {
  Expr phi1, phi2;
};

/// K0 = -Gamma^2_{11},  K1 = Gamma^1_{11} - 2 Gamma^2_{12},
/// K2 = 2 Gamma^1_{12} - Gamma^2_{22},  K3 = Gamma^1_{22}.
/// Throws NotTorsionFree.
GeodesicOde geodesic_ode(const Connection& c);

/// The classical pair (L1, L2) computed verbatim from the defining formulas.
LiouvillePair liouville_invariants(const GeodesicOde& ode);

/// True iff both Liouville invariants of geodesic_ode(c) vanish identically.
/// Throws NotTorsionFree.
bool is_projectively_flat(const Connection& c);

/// If w = delta^k_i phi_j + delta^k_j phi_i for some one-form phi, returns
/// phi; otherwise nullopt. Throws NotSymmetric if w is not symmetric in its
/// lower slots.
std::optional<OneForm> trace_decompose(const DiffTensor& w);

}  // namespace holoconn
