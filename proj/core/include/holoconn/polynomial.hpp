#pragma once

#include <map>
#include <string>
#include <utility>

#include "holoconn/scalar.hpp"

namespace holoconn {

/// Exponent pair of a monomial x1^p * x2^q, ordered by graded lexicographic
/// order (total degree first, then the exponent of the first variable).
struct Monomial {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.p < b.p;
  }
};

/// The two chart variable names used for parsing and printing.
struct Chart {
  std::string v1 = "z";
  std::string v2 = "xi";

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Sparse bivariate polynomial over the Gaussian rationals.
///
/// Terms are kept in a grlex-sorted map with no zero coefficients, so equal
/// polynomials are structurally equal and printing is deterministic.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Polynomial() = default;
  explicit Polynomial(Scalar c) { set(Monomial{0, 0}, std::move(c)); }

  static Polynomial variable(int var);  // var in {1, 2}
  static Polynomial term(Monomial m, Scalar c) {
    Polynomial r;
    r.set(m, std::move(c));
    return r;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }
  Scalar constant_value() const;  // requires is_constant()

  Scalar coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  void set(Monomial m, Scalar c) {
    if (c.is_zero())
      terms_.erase(m);
    else
      terms_[m] = std::move(c);
  }
  void add_term(Monomial m, const Scalar& c);

  int total_degree() const;       // -1 for the zero polynomial
  int degree_in(int var) const;   // -1 for the zero polynomial
  bool depends_on(int var) const { return degree_in(var) > 0; }

  /// Coefficient of the grlex-largest monomial (zero for the zero polynomial).
  Scalar leading_coefficient() const;
  /// Divides by the leading coefficient; no-op on the zero polynomial.
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator*(const Polynomial& a, const Scalar& s);
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Polynomial derivative(int var) const;
  Scalar eval(const Scalar& x1, const Scalar& x2) const;

  /// P(x1 + d1, x2 + d2); exact binomial re-expansion.
  Polynomial translate(const Scalar& d1, const Scalar& d2) const;
  /// Drops every term of total degree > order.
  Polynomial truncate(int order) const;

  /// Exact quotient; the caller guarantees divisibility (internal invariant,
  /// violated only by a bug, hence Error not a user-facing type).
  friend Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

  /// GCD in Q(i)[x1, x2], normalized so the grlex-leading coefficient is 1.
  friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Canonical string in the expression grammar (grlex-descending terms).
  std::string to_string(const Chart& chart) const;

 private:
  TermMap terms_;
};

}  // namespace holoconn
