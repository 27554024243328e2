#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "holoconn/connection.hpp"

namespace holoconn {

/// Symbolic vector field a * d1 + b * d2.
struct VectorField {
  Expr a, b;
};

/// One scalar equation of the Killing system: a linear homogeneous
/// differential operator in the two unknown components, stored as a map
/// (unknown index 1|2, derivative bidegree) -> coefficient expression.
/// Derivative orders never exceed two.
class KillingEquation {
 public:
  using Key = std::pair<int, Monomial>;

  const std::map<Key, Expr>& terms() const { return terms_; }

  Expr coeff(int unknown, Monomial m) const {
    auto it = terms_.find({unknown, m});
    return it == terms_.end() ? Expr(0) : it->second;
  }
  void add(int unknown, Monomial m, const Expr& e) {
    Key k{unknown, m};
    auto it = terms_.find(k);
    Expr sum = it == terms_.end() ? e : it->second + e;
    if (sum.is_zero())
      terms_.erase(k);
    else
      terms_[k] = std::move(sum);
  }

  /// Value of the operator on a concrete field.
  Expr apply(const VectorField& x) const;

  /// True when the two equations agree up to one overall constant factor.
  bool proportional_to(const KillingEquation& other) const;

 private:
  std::map<Key, Expr> terms_;
};

/// The six scalar equations obtained by writing the Killing identity for the
/// couples (d1,d1), (d1,d2), (d2,d2) and projecting on d1, d2, in that order.
struct KillingSystem {
  Chart chart;
  std::array<KillingEquation, 6> equations;
};

/// Per-order solution spaces of the prolonged Killing system at a point.
/// Dimensions are non-increasing in the order.
struct JetSolutionSpace {
  ChartPoint base;
  std::vector<std::pair<int, int>> per_order;           // (order m, dimension), m = 2..n
  std::vector<std::pair<SeriesJet, SeriesJet>> basis;   // (jet of a, jet of b) at order n
};

struct KillingDimension {
  int dimension;
  bool stabilized;
};

/// Throws NotTorsionFree.
KillingSystem killing_system(const Connection& c);

/// True iff x satisfies every equation identically. Throws NotTorsionFree.
bool is_killing(const Connection& c, const VectorField& x);

/// For each order m in [2, n]: exact dimension of the space of m-jets of
/// (a, b) at `base` satisfying all equations differentiated up to total order
/// m - 2; basis returned at order n. Throws PoleAtBase / NotTorsionFree.
JetSolutionSpace killing_jet_space(const Connection& c, const ChartPoint& base,
                                   int order);

/// Jet-space dimension if constant over the last `window` orders up to
/// `max_order` (stabilized = true), else the last value with
/// stabilized = false. Formal-order stabilization is evidence, not proof, of
/// the local Killing-algebra dimension.
KillingDimension killing_dimension(const Connection& c, const ChartPoint& base,
                                   int max_order, int window);

}  // namespace holoconn
