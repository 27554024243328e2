#include "holoconn/families.hpp"

#include <cmath>
#include <cstdlib>

#include "holoconn/errors.hpp"

namespace holoconn {

Connection translation_invariant(const TranslationInvariantData& d, Chart chart) {
  Connection c(std::move(chart));
  c.set_gamma(1, 1, 1, Expr(d.g1_11));
  c.set_gamma(1, 1, 2, Expr(d.g1_12));
  c.set_gamma(1, 2, 1, Expr(d.g1_12));
  c.set_gamma(1, 2, 2, Expr(d.g1_22));
  c.set_gamma(2, 1, 1, Expr(d.g2_11));
  c.set_gamma(2, 1, 2, Expr(d.g2_12));
  c.set_gamma(2, 2, 1, Expr(d.g2_12));
  c.set_gamma(2, 2, 2, Expr(d.g2_22));
  return c;
}

std::array<Scalar, 4> flatness_relations(const TranslationInvariantData& d) {
  // Constant Christoffels: the derivative terms of the curvature vanish and
  // R^l_k = sum_m (G^l_{1m} G^m_{2k} - G^l_{2m} G^m_{1k}).
  auto g = [&](int k, int i, int j) -> const Scalar& {
    // symmetric completion of the six constants
    if (i > j) std::swap(i, j);
    if (k == 1) return i == 1 ? (j == 1 ? d.g1_11 : d.g1_12) : d.g1_22;
    return i == 1 ? (j == 1 ? d.g2_11 : d.g2_12) : d.g2_22;
  };
  std::array<Scalar, 4> out;
  size_t idx = 0;
  for (int l = 1; l <= 2; ++l)
    for (int k = 1; k <= 2; ++k, ++idx) {
      Scalar r(0);
      for (int m = 1; m <= 2; ++m)
        r += g(l, 1, m) * g(m, 2, k) - g(l, 2, m) * g(m, 1, k);
      out[idx] = r;
    }
  return out;
}

EllipticFamilyData::EllipticFamilyData(Expr f12, Expr g22, Expr g12)
    : f12_(std::move(f12)), g22_(std::move(g22)), g12_(std::move(g12)) {
  for (const Expr* e : {&f12_, &g22_, &g12_})
    if (!diff(*e, 1).is_zero())
      throw DependsOnFirstVariable(
          "family data must depend on the second chart variable only");
}

Expr EllipticFamilyData::parameter_w() const {
  return Expr(-2) * g12_ + diff(g22_, 2) - diff(f12_, 2);
}

EllipticFamilyData EllipticFamilyData::from_parameters(const Expr& f12,
                                                       const Expr& g22,
                                                       const Expr& w) {
  Expr g12 = (diff(g22, 2) - diff(f12, 2) - w) / Expr(2);
  return EllipticFamilyData(f12, g22, g12);
}

Connection elliptic_family(const EllipticFamilyData& d, Chart chart) {
  Connection c(std::move(chart));
  c.set_gamma(1, 1, 1, Expr(1));
  c.set_gamma(1, 1, 2, d.f12());
  c.set_gamma(1, 2, 1, d.f12());
  c.set_gamma(1, 2, 2, d.g12());
  c.set_gamma(2, 1, 2, Expr(1));
  c.set_gamma(2, 2, 1, Expr(1));
  c.set_gamma(2, 2, 2, d.g22());
  return c;
}

std::array<Expr, 6> gamma_equivariance_residuals(const EllipticFamilyData& d,
                                                 const MoebiusElement& g) {
  if (!(g.a * g.d - g.b * g.c == Scalar(1)))
    throw NotUnimodular("Moebius element must have determinant 1");

  const Expr xi = Expr::variable(2);
  const Expr jac = Expr(g.c) * xi + Expr(g.d);  // c*xi + d
  const Expr moebius = (Expr(g.a) * xi + Expr(g.b)) / jac;
  auto pull = [&](const Expr& e) { return subs(e, 2, moebius); };
  const Expr c(g.c);

  // The components f11, f21, f22 of the stored data are identically zero.
  const Expr zero(0);
  const Expr f12 = d.f12(), g12 = d.g12(), g22 = d.g22();
  const Expr F11 = pull(zero), F12 = pull(f12), F21 = pull(zero),
             F22 = pull(zero), G12 = pull(g12), G22 = pull(g22);

  std::array<Expr, 6> r;
  r[0] = zero - (F11 - c * F21 * jac);
  r[1] = f12 - (F12 / jac.pow(2) - Expr(2) * c * c * F21 - c * F22 / jac +
                Expr(2) * c * F11 / jac);
  r[2] = zero - F21 * jac.pow(2);
  r[3] = zero - (Expr(2) * F21 * c * jac + F22);
  r[4] = g12 - (G12 / jac.pow(4) + c * c * F11 / jac.pow(2) +
                c * F12 / jac.pow(3) - c.pow(3) * F21 / jac -
                c * c * F22 / jac.pow(2) - c * G22 / jac.pow(3));
  r[5] = g22 - (G22 / jac.pow(2) + c * F22 / jac + c * c * F21);
  return r;
}

// ---------------------------------------------------------------------------
// Inoue S_M scale factors
// ---------------------------------------------------------------------------

long IntMatrix3::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

long IntMatrix3::trace() const { return a[0][0] + a[1][1] + a[2][2]; }

long IntMatrix3::principal_minor_sum() const {
  return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
         (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
         (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
}

IntMatrix3 IntMatrix3::companion(long c2, long c1, long c0) {
  return IntMatrix3{{{{0, 0, -c0}, {1, 0, -c1}, {0, 1, -c2}}}};
}

InoueScaleAnalysis inoue_sm_invariant_space(const IntMatrix3& m) {
  if (m.det() != 1)
    throw BadSpectrum("matrix is not in SL(3,Z): determinant != 1");

  // Characteristic polynomial x^3 - t x^2 + s x - 1.
  const double t = static_cast<double>(m.trace());
  const double s = static_cast<double>(m.principal_minor_sum());
  auto p = [&](double x) { return ((x - t) * x + s) * x - 1.0; };
  auto dp = [&](double x) { return (3.0 * x - 2.0 * t) * x + s; };

  // One real root plus a non-real pair iff the discriminant is negative.
  const double a2 = -t, a1 = s, a0 = -1.0;
  const double disc = 18.0 * a2 * a1 * a0 - 4.0 * a2 * a2 * a2 * a0 +
                      a2 * a2 * a1 * a1 - 4.0 * a1 * a1 * a1 -
                      27.0 * a0 * a0;
  if (disc >= 0.0)
    throw BadSpectrum("eigenvalues are not one real plus a conjugate pair");

  // Bracket the real root, then bisect to machine precision.
  double hi = 1.0 + std::abs(t) + std::abs(s) + 1.0;
  double lo = -hi;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  double alpha = 0.5 * (lo + hi);
  for (int it = 0; it < 5; ++it) alpha -= p(alpha) / dp(alpha);

  if (!(alpha > 1.0))
    throw BadSpectrum("real eigenvalue is not greater than 1");

  // x^3 - t x^2 + s x - 1 = (x - alpha)(x^2 + p1 x + q); q = 1/alpha since
  // the root product is det = 1, so |beta|^2 = 1/alpha exactly.
  const double p1 = alpha - t;
  const double q = 1.0 / alpha;
  const double under = q - 0.25 * p1 * p1;
  if (under <= 0.0)
    throw BadSpectrum("conjugate pair is not strictly non-real");
  const std::complex<double> beta(-0.5 * p1, std::sqrt(under));

  // Slot weights under (w, z) -> (alpha w, beta z): dz ~ beta, dw ~ alpha,
  // d/dz ~ 1/beta, d/dw ~ 1/alpha. Components in the fixed order
  // f11, f12, f21, f22, g11, g12, g21, g22 with slots
  // (first covariant, second covariant, contravariant); f* carry dz first,
  // g* carry dw first; second index 1 -> dz, 2 -> dw; first index 1 -> d/dz,
  // 2 -> d/dw.
  const std::complex<double> wz(alpha, 0.0);
  const std::complex<double> slot_cov[2] = {beta, wz};   // dz, dw
  const std::complex<double> slot_con[2] = {1.0 / beta, 1.0 / wz};
  InoueScaleAnalysis out{alpha, beta, {}, 0, 0.0};
  size_t idx = 0;
  double min_margin = 1e300;
  for (int first = 0; first < 2; ++first)        // 0: f (dz), 1: g (dw)
    for (int outdir = 0; outdir < 2; ++outdir)   // 0: d/dz, 1: d/dw
      for (int second = 0; second < 2; ++second, ++idx) {  // 0: dz, 1: dw
        std::complex<double> f =
            slot_cov[first] * slot_cov[second] * slot_con[outdir];
        out.factors[idx] = f;
        if (std::abs(f - 1.0) < 1e-9) ++out.invariant_dimension;
        min_margin = std::min(min_margin, std::abs(std::abs(f) - 1.0));
      }
  out.min_modulus_margin = min_margin;
  return out;
}

}  // namespace holoconn
