#pragma once

#include <random>

#include "holoconn/families.hpp"

namespace holoconn::testing {

/// Deterministic random source for reproducible suites.
class Rng {
 public:
  explicit Rng(unsigned long seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p;
  }

  /// Small exact rational, optionally with an imaginary part.
  Scalar small_scalar(bool allow_complex = true, int max_abs = 3);

  /// Sparse polynomial of total degree <= max_degree. var = 0 uses both
  /// variables, 1 or 2 restricts to that variable.
  Polynomial polynomial(int max_degree, int max_terms, int var = 0,
                        bool allow_complex = true);

  Expr polynomial_expr(int max_degree, int max_terms, int var = 0,
                       bool allow_complex = true);
  /// Ratio of two random polynomials with a guaranteed nonzero denominator.
  Expr rational_expr(int max_degree, int max_terms, bool allow_complex = true);

  TranslationInvariantData translation_data(int lo, int hi);
  /// Polynomial-in-xi family data of degree <= max_degree.
  EllipticFamilyData elliptic_data(int max_degree, bool allow_zero_f12 = false);

 private:
  std::mt19937_64 eng_;
};

}  // namespace holoconn::testing
