#include "holoconn/killing.hpp"

#include <algorithm>

#include "holoconn/errors.hpp"

namespace holoconn {

namespace {

// Monomials of total degree <= n in grlex-ascending order.
std::vector<Monomial> monomials_up_to(int n) {
  std::vector<Monomial> out;
  for (int d = 0; d <= n; ++d)
    for (int p = 0; p <= d; ++p) out.push_back(Monomial{p, d - p});
  return out;
}

Scalar factorial(int n) {
  Scalar r(1);
  for (int k = 2; k <= n; ++k) r *= Scalar(k);
  return r;
}

Scalar binom(int n, int k) {
  Scalar r(1);
  for (int j = 0; j < k; ++j) r *= Scalar(n - j);
  return r / factorial(k);
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> rref(std::vector<std::vector<Scalar>>& m, size_t ncols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inverse();
    for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (size_t j = col; j < ncols; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the nullspace of an RREF'd matrix, one vector per free column.
std::vector<std::vector<Scalar>> nullspace_basis(
    const std::vector<std::vector<Scalar>>& m, size_t ncols,
    const std::vector<size_t>& pivots) {
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(ncols, Scalar(0));
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Expr KillingEquation::apply(const VectorField& x) const {
  Expr acc(0);
  for (const auto& [key, c] : terms_) {
    Expr u = key.first == 1 ? x.a : x.b;
    for (int k = 0; k < key.second.p; ++k) u = diff(u, 1);
    for (int k = 0; k < key.second.q; ++k) u = diff(u, 2);
    acc += c * u;
  }
  return acc;
}

bool KillingEquation::proportional_to(const KillingEquation& other) const {
  if (terms_.empty() || other.terms_.empty()) return terms_.empty() == other.terms_.empty();
  if (terms_.size() != other.terms_.size()) return false;
  Expr lambda(0);
  for (const auto& [key, c] : terms_) {
    auto it = other.terms_.find(key);
    if (it == other.terms_.end()) return false;
    if (lambda.is_zero()) {
      lambda = c / it->second;
      if (!lambda.is_constant()) return false;
    } else if (!(c - lambda * it->second).is_zero()) {
      return false;
    }
  }
  return true;
}

KillingSystem killing_system(const Connection& c) {
  if (!c.is_torsion_free())
    throw NotTorsionFree("the Killing system presumes a torsion-free connection");
  KillingSystem sys{c.chart(), {}};
  // For the couple (d_i, d_j) projected on d_k, the Lie-derivative expansion:
  //   d_i d_j X^k
  //   + sum_l [ G^k_{lj} d_i X^l + G^k_{il} d_j X^l - G^l_{ij} d_l X^k ]
  //   + sum_l (d_l G^k_{ij}) X^l = 0.
  const std::array<std::pair<int, int>, 3> couples{{{1, 1}, {1, 2}, {2, 2}}};
  size_t eq = 0;
  for (auto [i, j] : couples) {
    for (int k = 1; k <= 2; ++k, ++eq) {
      KillingEquation& E = sys.equations[eq];
      Monomial second{(i == 1) + (j == 1), (i == 2) + (j == 2)};
      E.add(k, second, Expr(1));
      for (int l = 1; l <= 2; ++l) {
        Monomial di{i == 1, i == 2}, dj{j == 1, j == 2}, dl{l == 1, l == 2};
        E.add(l, di, c.gamma(k, l, j));
        E.add(l, dj, c.gamma(k, i, l));
        E.add(k, dl, -c.gamma(l, i, j));
        E.add(l, Monomial{0, 0}, diff(c.gamma(k, i, j), l));
      }
    }
  }
  return sys;
}

bool is_killing(const Connection& c, const VectorField& x) {
  KillingSystem sys = killing_system(c);
  return std::all_of(sys.equations.begin(), sys.equations.end(),
                     [&](const KillingEquation& e) { return e.apply(x).is_zero(); });
}

JetSolutionSpace killing_jet_space(const Connection& c, const ChartPoint& base,
                                   int order) {
  if (order < 2) throw Error("jet prolongation needs order >= 2");
  KillingSystem sys = killing_system(c);

  // Jets of every coefficient expression at the base point, to the highest
  // differentiation order needed. PoleAtBase propagates from here.
  const int max_diff = order - 2;
  std::vector<std::vector<std::pair<KillingEquation::Key, SeriesJet>>> coeff_jets;
  coeff_jets.reserve(6);
  for (const auto& e : sys.equations) {
    std::vector<std::pair<KillingEquation::Key, SeriesJet>> js;
    for (const auto& [key, expr] : e.terms())
      js.emplace_back(key, jet(expr, base, max_diff));
    coeff_jets.push_back(std::move(js));
  }

  // d^mu coeff (base) = mu! * taylor coefficient.
  auto deriv_at_base = [&](const SeriesJet& j, Monomial mu) {
    return j.coeff(mu) * factorial(mu.p) * factorial(mu.q);
  };

  JetSolutionSpace out{base, {}, {}};
  for (int m = 2; m <= order; ++m) {
    std::vector<Monomial> cols_m = monomials_up_to(m);
    const size_t per_unknown = cols_m.size();
    const size_t ncols = 2 * per_unknown;
    auto col_index = [&](int unknown, Monomial g) -> size_t {
      size_t base_idx = unknown == 1 ? 0 : per_unknown;
      auto it = std::lower_bound(cols_m.begin(), cols_m.end(), g);
      return base_idx + static_cast<size_t>(it - cols_m.begin());
    };

    std::vector<std::vector<Scalar>> rows;
    for (const Monomial& alpha : monomials_up_to(m - 2)) {
      for (size_t e = 0; e < 6; ++e) {
        std::vector<Scalar> row(ncols, Scalar(0));
        for (const auto& [key, cj] : coeff_jets[e]) {
          const auto& [unknown, delta] = key;
          for (int b1 = 0; b1 <= alpha.p; ++b1)
            for (int b2 = 0; b2 <= alpha.q; ++b2) {
              Monomial mu{alpha.p - b1, alpha.q - b2};
              Scalar cval = deriv_at_base(cj, mu);
              if (cval.is_zero()) continue;
              Monomial g{b1 + delta.p, b2 + delta.q};
              row[col_index(unknown, g)] +=
                  binom(alpha.p, b1) * binom(alpha.q, b2) * cval;
            }
        }
        rows.push_back(std::move(row));
      }
    }

    auto pivots = rref(rows, ncols);
    auto basis = nullspace_basis(rows, ncols, pivots);
    out.per_order.emplace_back(m, static_cast<int>(basis.size()));

    if (m == order) {
      for (const auto& v : basis) {
        SeriesJet ja(base, order), jb(base, order);
        for (size_t idx = 0; idx < per_unknown; ++idx) {
          Scalar fact =
              (factorial(cols_m[idx].p) * factorial(cols_m[idx].q)).inverse();
          ja.set(cols_m[idx], v[idx] * fact);
          jb.set(cols_m[idx], v[per_unknown + idx] * fact);
        }
        out.basis.emplace_back(std::move(ja), std::move(jb));
      }
    }
  }
  return out;
}

KillingDimension killing_dimension(const Connection& c, const ChartPoint& base,
                                   int max_order, int window) {
  if (window < 1) throw Error("stabilization window must be positive");
  JetSolutionSpace space = killing_jet_space(c, base, max_order);
  const auto& dims = space.per_order;
  int last = dims.back().second;
  bool stabilized = static_cast<int>(dims.size()) >= window;
  for (size_t k = dims.size() - static_cast<size_t>(std::min<int>(window, dims.size()));
       stabilized && k < dims.size(); ++k)
    stabilized = dims[k].second == last;
  return KillingDimension{last, stabilized};
}

}  // namespace holoconn
