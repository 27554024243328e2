#pragma once

#include <gmpxx.h>

#include <string>

#include "holoconn/errors.hpp"

namespace holoconn {

/// A Gaussian rational a + b*i with exact GMP rational components.
///
/// Both components are kept canonical (reduced, positive denominator) by
/// mpq_class. Every arithmetic operation is exact; there is no floating
/// point anywhere in the kernel.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    re_.canonicalize();
  }
  explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {
    canonicalize_part(re_);
  }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize_part(re_);
    canonicalize_part(im_);
  }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }

  /// |a + b*i|^2 = a^2 + b^2, an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    Scalar one(1);
    return one /= *this;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical string in the expression grammar, e.g. "3/2", "-i", "1+2*i".
  /// Mixed complex values are parenthesized so the result stays grammar-valid
  /// in any multiplicative context.
  std::string to_string() const;

  /// True when the printed form would need a leading '-' pulled out by the
  /// polynomial printer: re < 0, or re = 0 and im < 0.
  bool print_negative() const { return re_ < 0 || (re_ == 0 && im_ < 0); }

 private:
  // GMP rational arithmetic presumes canonical operands; enforce it at the
  // construction boundary.
  static void canonicalize_part(mpq_class& q) {
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
  }

  mpq_class re_, im_;
};

}  // namespace holoconn
