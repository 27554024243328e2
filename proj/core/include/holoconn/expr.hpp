#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "holoconn/polynomial.hpp"

namespace holoconn {

/// A point of the chart: exact values of the two chart variables.
struct ChartPoint {
  Scalar x1, x2;

  friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
};

/// Truncated Taylor expansion at a base point: coefficients of
/// (x1 - base.x1)^p (x2 - base.x2)^q for p + q <= order.
///
/// Jets of equal base and order form a vector space under the coefficientwise
/// operations below.
class SeriesJet {
 public:
  SeriesJet(ChartPoint base, int order) : base_(std::move(base)), order_(order) {}
  SeriesJet(ChartPoint base, int order, std::map<Monomial, Scalar> coeffs);

  const ChartPoint& base() const { return base_; }
  int order() const { return order_; }
  const std::map<Monomial, Scalar>& coefficients() const { return coeffs_; }

  Scalar coeff(Monomial m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }
  void set(Monomial m, Scalar c);

  bool is_zero() const { return coeffs_.empty(); }

  SeriesJet operator-() const;
  SeriesJet& operator+=(const SeriesJet& o);
  SeriesJet& operator-=(const SeriesJet& o);
  friend SeriesJet operator+(SeriesJet a, const SeriesJet& b) { return a += b; }
  friend SeriesJet operator-(SeriesJet a, const SeriesJet& b) { return a -= b; }
  friend SeriesJet operator*(const SeriesJet& a, const Scalar& s);

  /// Formal derivative; the order drops by one.
  SeriesJet derivative(int var) const;

  friend bool operator==(const SeriesJet& a, const SeriesJet& b) {
    return a.base_ == b.base_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const Chart& chart) const;

 private:
  ChartPoint base_;
  int order_;
  std::map<Monomial, Scalar> coeffs_;
};

namespace detail {
struct ExprRepr;
}

/// Exact rational expression in the two chart variables, held in canonical
/// form: a reduced fraction of two polynomials with gcd 1 and grlex-monic
/// denominator. Expressions are immutable values; copies share storage.
class Expr {
 public:
  Expr() : Expr(Scalar(0)) {}
  Expr(long v) : Expr(Scalar(v)) {}  // NOLINT: implicit by design
  explicit Expr(Scalar c);
  explicit Expr(Polynomial p);
  /// Reduces num/den to canonical form; throws DivisionByZero if den == 0.
  Expr(Polynomial num, Polynomial den);

  static Expr variable(int var) { return Expr(Polynomial::variable(var)); }

  const Polynomial& num() const;
  const Polynomial& den() const;

  bool is_zero() const { return num().is_zero(); }
  bool is_constant() const { return num().is_constant() && den().is_constant(); }
  Scalar constant_value() const;  // requires is_constant()
  bool is_polynomial() const { return den().is_constant(); }

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);  // throws DivisionByZero
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }
  Expr pow(unsigned e) const;

  /// Structural equality of the canonical forms (canonical forms are unique,
  /// so this decides equality of the rational functions).
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.num() == b.num() && a.den() == b.den();
  }

  /// Re-runs normalization on the stored pair; canonicalization is
  /// idempotent, so the result always equals *this.
  Expr canonical() const { return Expr(num(), den()); }

  std::string to_string(const Chart& chart) const;

 private:
  explicit Expr(std::shared_ptr<const detail::ExprRepr> repr)
      : repr_(std::move(repr)) {}
  std::shared_ptr<const detail::ExprRepr> repr_;
};

/// Exact partial derivative with respect to chart variable `var` (1 or 2).
Expr diff(const Expr& e, int var);

/// Capture-free substitution of `replacement` for variable `var`.
/// Throws PoleCreated if a denominator becomes identically zero.
Expr subs(const Expr& e, int var, const Expr& replacement);

/// True iff `e` is identically zero as a rational function.
bool is_zero(const Expr& e);

/// Exact value at a point; throws PoleAtBase if the denominator vanishes there.
Scalar eval(const Expr& e, const ChartPoint& p);

/// Taylor coefficients up to total degree `order` at `base`; exact.
/// Throws PoleAtBase if the denominator vanishes at `base`.
SeriesJet jet(const Expr& e, const ChartPoint& base, int order);

}  // namespace holoconn
