#include "holoconn/expr.hpp"

#include <cassert>
#include <utility>
#include <vector>

#include "holoconn/errors.hpp"

namespace holoconn {

// ---------------------------------------------------------------------------
// SeriesJet
// ---------------------------------------------------------------------------

SeriesJet::SeriesJet(ChartPoint base, int order, std::map<Monomial, Scalar> coeffs)
    : base_(std::move(base)), order_(order), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero() || it->first.total() > order_)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

void SeriesJet::set(Monomial m, Scalar c) {
  if (m.total() > order_) return;
  if (c.is_zero())
    coeffs_.erase(m);
  else
    coeffs_[m] = std::move(c);
}

SeriesJet SeriesJet::operator-() const {
  SeriesJet r(base_, order_);
  for (const auto& [m, c] : coeffs_) r.coeffs_.emplace(m, -c);
  return r;
}

namespace {
void require_compatible(const SeriesJet& a, const SeriesJet& b) {
  if (!(a.base() == b.base()) || a.order() != b.order())
    throw Error("jet operands must share base point and order");
}
}  // namespace

SeriesJet& SeriesJet::operator+=(const SeriesJet& o) {
  require_compatible(*this, o);
  for (const auto& [m, c] : o.coefficients()) set(m, coeff(m) + c);
  return *this;
}

SeriesJet& SeriesJet::operator-=(const SeriesJet& o) {
  require_compatible(*this, o);
  for (const auto& [m, c] : o.coefficients()) set(m, coeff(m) - c);
  return *this;
}

SeriesJet operator*(const SeriesJet& a, const Scalar& s) {
  SeriesJet r(a.base(), a.order());
  for (const auto& [m, c] : a.coefficients()) r.set(m, c * s);
  return r;
}

SeriesJet SeriesJet::derivative(int var) const {
  SeriesJet r(base_, order_ - 1);
  for (const auto& [m, c] : coeffs_) {
    int e = var == 1 ? m.p : m.q;
    if (e == 0) continue;
    Monomial dm = var == 1 ? Monomial{m.p - 1, m.q} : Monomial{m.p, m.q - 1};
    r.set(dm, c * Scalar(e));
  }
  return r;
}

std::string SeriesJet::to_string(const Chart& chart) const {
  Polynomial p;
  for (const auto& [m, c] : coeffs_) p.set(m, c);
  return p.to_string(chart) + " + O(" + std::to_string(order_ + 1) + ")";
}

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

namespace detail {
struct ExprRepr {
  Polynomial num;
  Polynomial den;  // canonical: gcd(num, den) = 1, den grlex-monic, den != 0
};
}  // namespace detail

namespace {

// Reduce to the unique canonical representative.
std::shared_ptr<const detail::ExprRepr> reduce(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("expression denominator is zero");
  if (num.is_zero())
    return std::make_shared<const detail::ExprRepr>(
        detail::ExprRepr{Polynomial(), Polynomial{Scalar(1)}});
  Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  Scalar lead = den.leading_coefficient().inverse();
  return std::make_shared<const detail::ExprRepr>(
      detail::ExprRepr{num * lead, den * lead});
}

std::shared_ptr<const detail::ExprRepr> make_repr(Polynomial num, Polynomial den) {
  return std::make_shared<const detail::ExprRepr>(
      detail::ExprRepr{std::move(num), std::move(den)});
}

}  // namespace

Expr::Expr(Scalar c)
    : repr_(make_repr(c.is_zero() ? Polynomial() : Polynomial(std::move(c)),
                      Polynomial{Scalar(1)})) {}

Expr::Expr(Polynomial p)
    : repr_(make_repr(std::move(p), Polynomial{Scalar(1)})) {}

Expr::Expr(Polynomial num, Polynomial den)
    : repr_(reduce(std::move(num), std::move(den))) {}

const Polynomial& Expr::num() const { return repr_->num; }
const Polynomial& Expr::den() const { return repr_->den; }

Scalar Expr::constant_value() const {
  assert(is_constant());
  return num().constant_value() / den().constant_value();
}

Expr Expr::operator-() const { return Expr(make_repr(-num(), den())); }

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Expr operator-(const Expr& a, const Expr& b) {
  return Expr(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Expr operator*(const Expr& a, const Expr& b) {
  return Expr(a.num() * b.num(), a.den() * b.den());
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DivisionByZero("division by identically-zero expression");
  return Expr(a.num() * b.den(), a.den() * b.num());
}

Expr Expr::pow(unsigned e) const {
  if (e == 0) return Expr(Scalar(1));
  // num/den already coprime, so no reduction is needed on powers.
  return Expr(make_repr(num().pow(e), den().pow(e)));
}

std::string Expr::to_string(const Chart& chart) const {
  if (is_polynomial()) return num().to_string(chart);
  return "(" + num().to_string(chart) + ")/(" + den().to_string(chart) + ")";
}

Expr diff(const Expr& e, int var) {
  const Polynomial& n = e.num();
  const Polynomial& d = e.den();
  if (d.is_constant())
    return Expr(n.derivative(var), d);
  // Quotient rule with the repeated part of the denominator divided out
  // up front: for g = gcd(d, d'), d = g*dh,
  //   (n/d)' = (n' dh - n (d'/g)) / (d dh).
  Polynomial dp = d.derivative(var);
  Polynomial g = gcd(d, dp);
  if (g.is_constant())
    return Expr(n.derivative(var) * d - n * dp, d * d);
  Polynomial dh = divide_exact(d, g);
  return Expr(n.derivative(var) * dh - n * divide_exact(dp, g), d * dh);
}

Expr subs(const Expr& e, int var, const Expr& replacement) {
  const Polynomial& rn = replacement.num();
  const Polynomial& rd = replacement.den();
  // P(sub) = H / rd^deg with H from Horner evaluation in `var`.
  auto substituted = [&](const Polynomial& p) -> std::pair<Polynomial, int> {
    int d = std::max(p.degree_in(var), 0);
    // Coefficients of p in `var` (polynomials in the other variable).
    std::vector<Polynomial> cs(static_cast<size_t>(d) + 1);
    for (const auto& [m, c] : p.terms()) {
      int ev = var == 1 ? m.p : m.q;
      Monomial rest = var == 1 ? Monomial{0, m.q} : Monomial{m.p, 0};
      cs[static_cast<size_t>(ev)].add_term(rest, c);
    }
    Polynomial h;  // Horner with denominator powers
    Polynomial rd_pow{Scalar(1)};
    for (int k = d; k >= 0; --k) {
      h = h * rn + cs[static_cast<size_t>(k)] * rd_pow;
      if (k > 0) rd_pow = rd_pow * rd;
    }
    return {h, d};
  };
  auto [hn, dn] = substituted(e.num());
  auto [hd, dd] = substituted(e.den());
  if (hd.is_zero())
    throw PoleCreated("substitution makes a denominator identically zero");
  // e(sub) = (hn / rd^dn) / (hd / rd^dd) = hn * rd^dd / (hd * rd^dn)
  if (dn >= dd)
    return Expr(hn, hd * rd.pow(static_cast<unsigned>(dn - dd)));
  return Expr(hn * rd.pow(static_cast<unsigned>(dd - dn)), hd);
}

bool is_zero(const Expr& e) { return e.is_zero(); }

Scalar eval(const Expr& e, const ChartPoint& p) {
  Scalar dv = e.den().eval(p.x1, p.x2);
  if (dv.is_zero()) throw PoleAtBase("denominator vanishes at the point");
  return e.num().eval(p.x1, p.x2) / dv;
}

SeriesJet jet(const Expr& e, const ChartPoint& base, int order) {
  if (order < 0) throw Error("jet order must be non-negative");
  Polynomial n = e.num().translate(base.x1, base.x2).truncate(order);
  Polynomial d = e.den().translate(base.x1, base.x2).truncate(order);
  Scalar d0 = d.coeff(Monomial{0, 0});
  if (d0.is_zero()) throw PoleAtBase("denominator vanishes at the base point");
  // Invert d = d0 (1 - t) as a truncated series: sum of t^k, k <= order.
  Polynomial t = Polynomial{Scalar(1)} - d * d0.inverse();
  Polynomial inv{Scalar(1)};
  Polynomial tk{Scalar(1)};
  for (int k = 1; k <= order; ++k) {
    tk = (tk * t).truncate(order);
    if (tk.is_zero()) break;
    inv += tk;
  }
  inv = inv * d0.inverse();
  Polynomial series = (n * inv).truncate(order);
  std::map<Monomial, Scalar> coeffs(series.terms().begin(), series.terms().end());
  return SeriesJet(base, order, std::move(coeffs));
}

}  // namespace holoconn
