#pragma once

#include <array>

#include "holoconn/expr.hpp"

namespace holoconn {

class DiffTensor;

/// Holomorphic affine connection on a two-dimensional chart, given by the
/// 2x2x2 table of Christoffel coefficients Gamma^k_{ij} (k upper, i j lower).
class Connection {
 public:
  explicit Connection(Chart chart = Chart{}) : chart_(std::move(chart)) {
    entries_.fill(Expr(0));
  }

  static Connection standard(Chart chart = Chart{}) { return Connection(std::move(chart)); }

  const Chart& chart() const { return chart_; }

  const Expr& gamma(int k, int i, int j) const { return entries_[index(k, i, j)]; }
  void set_gamma(int k, int i, int j, Expr e) { entries_[index(k, i, j)] = std::move(e); }

  bool is_torsion_free() const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.chart_ == b.chart_ && a.entries_ == b.entries_;
  }

 private:
  static size_t index(int k, int i, int j) {
    return static_cast<size_t>(((k - 1) * 2 + (i - 1)) * 2 + (j - 1));
  }
  Chart chart_;
  std::array<Expr, 8> entries_;
};

/// Section-type (1,2)-tensor omega^k_{ij}; the natural difference of two
/// affine connections on the same chart.
class DiffTensor {
 public:
  explicit DiffTensor(Chart chart = Chart{}) : chart_(std::move(chart)) {
    entries_.fill(Expr(0));
  }

  const Chart& chart() const { return chart_; }

  const Expr& omega(int k, int i, int j) const { return entries_[index(k, i, j)]; }
  void set_omega(int k, int i, int j, Expr e) { entries_[index(k, i, j)] = std::move(e); }

  bool is_zero() const;
  /// Symmetry in the two lower slots.
  bool is_symmetric() const;

 private:
  static size_t index(int k, int i, int j) {
    return static_cast<size_t>(((k - 1) * 2 + (i - 1)) * 2 + (j - 1));
  }
  Chart chart_;
  std::array<Expr, 8> entries_;
};

/// Curvature R(d1, d2): only the (d1, d2) slot is stored; the completion in
/// the last two (antisymmetric) arguments is implicit since the chart is
/// two-dimensional. entry(l, k) is the d_l component of R(d1, d2) d_k.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(Chart chart = Chart{}) : chart_(std::move(chart)) {
    entries_.fill(Expr(0));
  }

  const Chart& chart() const { return chart_; }

  const Expr& entry(int l, int k) const {
    return entries_[static_cast<size_t>((l - 1) * 2 + (k - 1))];
  }
  void set_entry(int l, int k, Expr e) {
    entries_[static_cast<size_t>((l - 1) * 2 + (k - 1))] = std::move(e);
  }

  /// Full four-argument access R^l_{k,i,j} via the antisymmetric completion.
  Expr full(int l, int k, int i, int j) const {
    if (i == j) return Expr(0);
    return i == 1 ? entry(l, k) : -entry(l, k);
  }

  bool is_zero() const;

 private:
  Chart chart_;
  std::array<Expr, 4> entries_;
};

/// T^k_{ij} = Gamma^k_{ij} - Gamma^k_{ji}; zero iff the connection is
/// torsion-free.
DiffTensor torsion(const Connection& c);

/// R^l_k = d1 Gamma^l_{2k} - d2 Gamma^l_{1k}
///         + sum_m (Gamma^l_{1m} Gamma^m_{2k} - Gamma^l_{2m} Gamma^m_{1k}).
CurvatureTensor curvature(const Connection& c);

/// True iff the curvature vanishes identically. Throws NotTorsionFree if the
/// connection has torsion.
bool is_flat(const Connection& c);

/// Entrywise difference; throws ChartMismatch when charts differ.
DiffTensor difference(const Connection& a, const Connection& b);

/// Inverse of difference: add(b, difference(a, b)) == a entrywise.
Connection add(const Connection& c, const DiffTensor& w);

}  // namespace holoconn
