#include "holoconn/connection.hpp"

#include "holoconn/errors.hpp"

namespace holoconn {

bool Connection::is_torsion_free() const {
  for (int k = 1; k <= 2; ++k)
    if (!(gamma(k, 1, 2) - gamma(k, 2, 1)).is_zero()) return false;
  return true;
}

bool DiffTensor::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool DiffTensor::is_symmetric() const {
  for (int k = 1; k <= 2; ++k)
    if (!(omega(k, 1, 2) - omega(k, 2, 1)).is_zero()) return false;
  return true;
}

bool CurvatureTensor::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

DiffTensor torsion(const Connection& c) {
  DiffTensor t(c.chart());
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        t.set_omega(k, i, j, c.gamma(k, i, j) - c.gamma(k, j, i));
  return t;
}

CurvatureTensor curvature(const Connection& c) {
  CurvatureTensor r(c.chart());
  for (int l = 1; l <= 2; ++l)
    for (int k = 1; k <= 2; ++k) {
      Expr e = diff(c.gamma(l, 2, k), 1) - diff(c.gamma(l, 1, k), 2);
      for (int m = 1; m <= 2; ++m)
        e += c.gamma(l, 1, m) * c.gamma(m, 2, k) -
             c.gamma(l, 2, m) * c.gamma(m, 1, k);
      r.set_entry(l, k, e);
    }
  return r;
}

bool is_flat(const Connection& c) {
  if (!c.is_torsion_free())
    throw NotTorsionFree("flatness presumes a torsion-free connection");
  return curvature(c).is_zero();
}

DiffTensor difference(const Connection& a, const Connection& b) {
  if (!(a.chart() == b.chart()))
    throw ChartMismatch("connections live on different charts");
  DiffTensor w(a.chart());
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        w.set_omega(k, i, j, a.gamma(k, i, j) - b.gamma(k, i, j));
  return w;
}

Connection add(const Connection& c, const DiffTensor& w) {
  if (!(c.chart() == w.chart()))
    throw ChartMismatch("connection and tensor live on different charts");
  Connection r(c.chart());
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        r.set_gamma(k, i, j, c.gamma(k, i, j) + w.omega(k, i, j));
  return r;
}

}  // namespace holoconn
