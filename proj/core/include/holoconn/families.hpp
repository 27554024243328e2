#pragma once

#include <array>
#include <complex>

#include "holoconn/connection.hpp"

namespace holoconn {

/// The six independent constants of a translation-invariant torsion-free
/// connection on C^2 (symmetric completion implied).
struct TranslationInvariantData {
  Scalar g1_11, g1_12, g1_22;
  Scalar g2_11, g2_12, g2_22;
};

/// Constant-coefficient torsion-free connection from the six constants.
Connection translation_invariant(const TranslationInvariantData& d,
                                 Chart chart = Chart{});

/// The four quadratic residuals whose simultaneous vanishing is equivalent to
/// flatness: the curvature entries evaluated as constants (derivative terms
/// vanish). Computed directly in scalar arithmetic, independently of the
/// symbolic curvature path.
std::array<Scalar, 4> flatness_relations(const TranslationInvariantData& d);

/// Data of the elliptic-fibration family: three coefficient functions of the
/// second chart variable only.
class EllipticFamilyData {
 public:
  /// Throws DependsOnFirstVariable if any datum involves the first variable.
  EllipticFamilyData(Expr f12, Expr g22, Expr g12);

  const Expr& f12() const { return f12_; }
  const Expr& g22() const { return g22_; }
  const Expr& g12() const { return g12_; }

  /// The derived third family coordinate w = -2 g12 + g22' - f12'.
  Expr parameter_w() const;
  /// Inverse view: recovers g12 = (g22' - f12' - w) / 2.
  static EllipticFamilyData from_parameters(const Expr& f12, const Expr& g22,
                                            const Expr& w);

 private:
  Expr f12_, g22_, g12_;
};

/// Total Christoffels of the family member: Gamma^1_{11} = 1,
/// Gamma^1_{12} = Gamma^1_{21} = f12, Gamma^1_{22} = g12, Gamma^2_{11} = 0,
/// Gamma^2_{12} = Gamma^2_{21} = 1, Gamma^2_{22} = g22.
Connection elliptic_family(const EllipticFamilyData& d, Chart chart = Chart{});

/// A unimodular 2x2 matrix acting on the second variable as a Moebius map.
struct MoebiusElement {
  Scalar a, b, c, d;
};

/// Residuals (left minus right) of the six equivariance equations of the
/// family under the Moebius action, specialized to the stored data (the
/// remaining tensor components are identically zero). All residuals vanish
/// iff the data is invariant under the group element.
/// Throws NotUnimodular when a*d - b*c != 1.
std::array<Expr, 6> gamma_equivariance_residuals(const EllipticFamilyData& d,
                                                 const MoebiusElement& g);

struct IntMatrix3 {
  std::array<std::array<long, 3>, 3> a;

  long det() const;
  long trace() const;
  long principal_minor_sum() const;

  static IntMatrix3 companion(long c2, long c1, long c0);  // of x^3+c2x^2+c1x+c0
};

/// Scale-factor analysis of constant (1,2)-tensors under the diagonal action
/// (w, z) -> (alpha w, beta z) attached to an SL(3,Z) matrix with one real
/// eigenvalue alpha > 1 and a non-real conjugate pair beta.
struct InoueScaleAnalysis {
  double alpha;
  std::complex<double> beta;
  /// One factor per tensor component, in the order
  /// f11, f12, f21, f22, g11, g12, g21, g22.
  std::array<std::complex<double>, 8> factors;
  /// Count of factors equal to 1 (within 1e-9): the dimension of the space
  /// of constant invariant tensors.
  int invariant_dimension;
  /// min over components of | |factor| - 1 |.
  double min_modulus_margin;
};

/// Throws BadSpectrum if det != 1 or the eigenvalue pattern fails.
InoueScaleAnalysis inoue_sm_invariant_space(const IntMatrix3& m);

}  // namespace holoconn
