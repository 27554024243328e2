#include "holoconn/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace holoconn {

namespace {

Monomial mono_of(int var, int e) {
  return var == 1 ? Monomial{e, 0} : Monomial{0, e};
}

void require_var(int var) {
  if (var != 1 && var != 2) throw Error("variable index must be 1 or 2");
}

}  // namespace

Polynomial Polynomial::variable(int var) {
  require_var(var);
  return term(mono_of(var, 1), Scalar(1));
}

Scalar Polynomial::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  assert(is_constant());
  return terms_.begin()->second;
}

void Polynomial::add_term(Monomial m, const Scalar& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total();
}

int Polynomial::degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, var == 1 ? m.p : m.q);
  return d;
}

Scalar Polynomial::leading_coefficient() const {
  if (terms_.empty()) return Scalar(0);
  return terms_.rbegin()->second;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Scalar inv = leading_coefficient().inverse();
  return *this * inv;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(Monomial{ma.p + mb.p, ma.q + mb.q}, ca * cb);
  return r;
}

Polynomial operator*(const Polynomial& a, const Scalar& s) {
  if (s.is_zero()) return Polynomial();
  Polynomial r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r{Scalar(1)};
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  require_var(var);
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    int e = var == 1 ? m.p : m.q;
    if (e == 0) continue;
    Monomial dm = var == 1 ? Monomial{m.p - 1, m.q} : Monomial{m.p, m.q - 1};
    r.add_term(dm, c * Scalar(e));
  }
  return r;
}

Scalar Polynomial::eval(const Scalar& x1, const Scalar& x2) const {
  // Powers cached up to the needed degree; degrees in this engine stay small.
  std::vector<Scalar> p1{Scalar(1)}, p2{Scalar(1)};
  auto power = [](std::vector<Scalar>& cache, const Scalar& x, int e) {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * x);
    return cache[static_cast<size_t>(e)];
  };
  Scalar acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * power(p1, x1, m.p) * power(p2, x2, m.q);
  return acc;
}

Polynomial Polynomial::translate(const Scalar& d1, const Scalar& d2) const {
  // (x + d)^e expanded once per needed exponent.
  auto shifted_powers = [](const Scalar& d, int var, int max_e) {
    std::vector<Polynomial> out;
    out.push_back(Polynomial{Scalar(1)});
    Polynomial x_plus_d = Polynomial::variable(var) + Polynomial(d);
    for (int e = 1; e <= max_e; ++e) out.push_back(out.back() * x_plus_d);
    return out;
  };
  Polynomial r;
  int dp = std::max(degree_in(1), 0), dq = std::max(degree_in(2), 0);
  auto xp = shifted_powers(d1, 1, dp);
  auto yp = shifted_powers(d2, 2, dq);
  for (const auto& [m, c] : terms_)
    r += xp[static_cast<size_t>(m.p)] * yp[static_cast<size_t>(m.q)] * c;
  return r;
}

Polynomial Polynomial::truncate(int order) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.total() <= order) r.terms_.emplace(m, c);
  return r;
}

// ---------------------------------------------------------------------------
// Exact division and GCD.
//
// Q(i)[x1, x2] is treated recursively as (Q(i)[x2])[x1]: univariate Euclid in
// one variable, a primitive pseudo-remainder sequence for the bivariate case.
// GCDs over the fraction field are avoided by clearing contents first.
// ---------------------------------------------------------------------------

namespace {

// Coefficient vector of `a` as a polynomial in `var`; entries are polynomials
// in the other variable. Index = exponent of `var`.
std::vector<Polynomial> coeffs_in(const Polynomial& a, int var) {
  std::vector<Polynomial> out(static_cast<size_t>(std::max(a.degree_in(var), 0)) + 1);
  for (const auto& [m, c] : a.terms()) {
    int e = var == 1 ? m.p : m.q;
    Monomial rest = var == 1 ? Monomial{0, m.q} : Monomial{m.p, 0};
    out[static_cast<size_t>(e)].add_term(rest, c);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

Polynomial assemble(const std::vector<Polynomial>& cs, int var) {
  Polynomial r;
  Polynomial x = Polynomial::variable(var);
  for (size_t e = 0; e < cs.size(); ++e)
    if (!cs[e].is_zero()) r += cs[e] * x.pow(static_cast<unsigned>(e));
  return r;
}

bool is_univariate_in(const Polynomial& a, int var) {
  return !a.depends_on(var == 1 ? 2 : 1);
}

// Euclidean remainder of two polynomials univariate in `var` (coefficients
// are field elements, so plain long division applies).
Polynomial univ_rem(const Polynomial& a, const Polynomial& b, int var) {
  Polynomial r = a;
  int db = b.degree_in(var);
  Scalar lb = b.terms().rbegin()->second;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Scalar lr = r.terms().rbegin()->second;
    Polynomial t = Polynomial::term(mono_of(var, dr - db), lr / lb);
    r -= t * b;
  }
  return r;
}

Polynomial univ_gcd(Polynomial a, Polynomial b, int var) {
  while (!b.is_zero()) {
    Polynomial r = univ_rem(a, b, var);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Exact quotient of polynomials univariate in `var`.
Polynomial univ_divide_exact(const Polynomial& a, const Polynomial& b, int var) {
  Polynomial q, r = a;
  int db = b.degree_in(var);
  Scalar lb = b.terms().rbegin()->second;
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) throw Error("internal: inexact univariate division");
    Scalar lr = r.terms().rbegin()->second;
    Polynomial t = Polynomial::term(mono_of(var, dr - db), lr / lb);
    q += t;
    r -= t * b;
  }
  return q;
}

// Content of `a` viewed in (Q(i)[other])[main]: univariate gcd of the
// main-variable coefficients.
Polynomial content(const std::vector<Polynomial>& cs, int other) {
  Polynomial g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : univ_gcd(g, c, other);
    if (g.is_constant()) return Polynomial{Scalar(1)};
  }
  return g.is_zero() ? Polynomial{Scalar(1)} : g;
}

std::vector<Polynomial> divide_coeffs(const std::vector<Polynomial>& cs,
                                      const Polynomial& d, int other) {
  if (d.is_constant()) {
    Scalar inv = d.constant_value().inverse();
    std::vector<Polynomial> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c * inv);
    return out;
  }
  std::vector<Polynomial> out;
  out.reserve(cs.size());
  for (const auto& c : cs)
    out.push_back(c.is_zero() ? c : univ_divide_exact(c, d, other));
  return out;
}

// Pseudo-remainder of a by b in the main variable; both given as coefficient
// vectors over Q(i)[other].
std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> r,
                                   const std::vector<Polynomial>& b) {
  const Polynomial& lb = b.back();
  size_t db = b.size() - 1;
  auto trim = [](std::vector<Polynomial>& v) {
    while (v.size() > 1 && v.back().is_zero()) v.pop_back();
  };
  while (true) {
    trim(r);
    if (r.size() == 1 && r[0].is_zero()) break;
    size_t dr = r.size() - 1;
    if (dr < db) break;
    Polynomial lr = r.back();
    // r <- lb * r - lr * x^(dr-db) * b; the top term cancels exactly.
    for (auto& c : r) c = c * lb;
    for (size_t k = 0; k < b.size(); ++k) r[dr - db + k] -= lr * b[k];
    if (!r.back().is_zero()) throw Error("internal: pseudo-division stalled");
  }
  return r;
}

// Image of `a` under x2 -> t, as a polynomial in x1.
Polynomial specialize_var2(const Polynomial& a, const Scalar& t) {
  std::vector<Scalar> powers{Scalar(1)};
  Polynomial out;
  for (const auto& [m, c] : a.terms()) {
    while (static_cast<int>(powers.size()) <= m.q)
      powers.push_back(powers.back() * t);
    out.add_term(Monomial{m.p, 0}, c * powers[static_cast<size_t>(m.q)]);
  }
  return out;
}

Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b) {
  const int main = 1, other = 2;
  auto ca = coeffs_in(a, main);
  auto cb = coeffs_in(b, main);
  Polynomial cont_a = content(ca, other);
  Polynomial cont_b = content(cb, other);
  Polynomial cont_g = univ_gcd(cont_a, cont_b, other);

  // Cheap certificate first: specialize x2 at a point keeping both leading
  // x1-coefficients alive. The specialized gcd bounds the x1-degree of the
  // true gcd from above, so a coprime image proves the gcd lives in the
  // contents alone. Typical reductions (derivatives, sums of reduced
  // fractions) land here.
  for (long t0 = 0; t0 <= 4; ++t0) {
    Scalar t(t0);
    if (ca.back().eval(Scalar(0), t).is_zero()) continue;
    if (cb.back().eval(Scalar(0), t).is_zero()) continue;
    Polynomial ga = specialize_var2(a, t);
    Polynomial gb = specialize_var2(b, t);
    if (univ_gcd(ga, gb, main).is_constant()) return cont_g;
    break;
  }

  auto pa = divide_coeffs(ca, cont_a, other);
  auto pb = divide_coeffs(cb, cont_b, other);
  if (pa.size() < pb.size()) std::swap(pa, pb);

  // Primitive pseudo-remainder sequence.
  while (!(pb.size() == 1 && pb[0].is_zero())) {
    auto r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    if (r.size() == 1 && r[0].is_zero()) {
      pb = std::move(r);
      break;
    }
    Polynomial cont_r = content(r, other);
    pb = divide_coeffs(r, cont_r, other);
  }
  Polynomial prim = assemble(pa, main);
  if (prim.degree_in(main) == 0) {
    // The primitive gcd is free of the main variable: only the content part
    // survives, and `prim` itself must divide both primitive parts, hence is
    // a unit in (Q(i)[other])[main] terms only if constant. Recompute its
    // univariate gcd with 1 -> constant 1.
    prim = Polynomial{Scalar(1)};
  }
  return (cont_g * prim).monic();
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("internal: division by zero polynomial");
  if (a.is_zero()) return a;
  if (b.is_constant()) return a * b.constant_value().inverse();
  if (is_univariate_in(a, 1) && is_univariate_in(b, 1))
    return univ_divide_exact(a, b, 1);
  if (is_univariate_in(a, 2) && is_univariate_in(b, 2))
    return univ_divide_exact(a, b, 2);
  // Long division in x1 with exact coefficient division in Q(i)[x2].
  auto ca = coeffs_in(a, 1);
  auto cb = coeffs_in(b, 1);
  if (cb.size() == 1) {
    auto q = divide_coeffs(ca, cb[0], 2);
    return assemble(q, 1);
  }
  if (ca.size() < cb.size()) throw Error("internal: inexact bivariate division");
  std::vector<Polynomial> q(ca.size() - cb.size() + 1);
  auto r = ca;
  const Polynomial& lb = cb.back();
  while (true) {
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    if (r.size() == 1 && r[0].is_zero()) break;
    if (r.size() < cb.size())
      throw Error("internal: inexact bivariate division");
    size_t shift = r.size() - cb.size();
    Polynomial qc = univ_divide_exact(r.back(), lb, 2);
    q[shift] = qc;
    for (size_t k = 0; k < cb.size(); ++k) r[shift + k] -= qc * cb[k];
    if (!r.back().is_zero())
      throw Error("internal: inexact bivariate division");
  }
  return assemble(q, 1);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  // Pull out the common monomial factor first; it keeps the recursive
  // routines on polynomials with a nonzero constant direction.
  auto min_exps = [](const Polynomial& x) {
    Monomial m{INT32_MAX, INT32_MAX};
    for (const auto& [t, c] : x.terms()) {
      m.p = std::min(m.p, t.p);
      m.q = std::min(m.q, t.q);
    }
    return m;
  };
  Monomial ma = min_exps(a), mb = min_exps(b);
  Monomial shared{std::min(ma.p, mb.p), std::min(ma.q, mb.q)};
  auto strip = [](const Polynomial& x, Monomial s) {
    if (s.p == 0 && s.q == 0) return x;
    Polynomial r;
    for (const auto& [t, c] : x.terms())
      r.set(Monomial{t.p - s.p, t.q - s.q}, c);
    return r;
  };
  Polynomial sa = strip(a, ma), sb = strip(b, mb);
  Polynomial mono = Polynomial::term(shared, Scalar(1));

  Polynomial core;
  if (sa.is_constant() || sb.is_constant()) {
    core = Polynomial{Scalar(1)};
  } else if (is_univariate_in(sa, 1) && is_univariate_in(sb, 1)) {
    core = univ_gcd(sa, sb, 1);
  } else if (is_univariate_in(sa, 2) && is_univariate_in(sb, 2)) {
    core = univ_gcd(sa, sb, 2);
  } else if ((is_univariate_in(sa, 1) && is_univariate_in(sb, 2)) ||
             (is_univariate_in(sa, 2) && is_univariate_in(sb, 1))) {
    core = Polynomial{Scalar(1)};  // disjoint variables
  } else {
    core = bivariate_gcd(sa, sb);
  }
  return (mono * core).monic();
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string Scalar::to_string() const {
  auto rat = [](const mpq_class& q) { return q.get_str(); };
  if (im_ == 0) return rat(re_);
  std::string ipart;
  if (im_ == 1)
    ipart = "i";
  else if (im_ == -1)
    ipart = "-i";
  else
    ipart = rat(im_) + "*i";
  if (re_ == 0) return ipart;
  std::string s = rat(re_);
  if (im_ > 0) s += "+";
  return "(" + s + ipart + ")";  // parenthesized: safe in any product
}

std::string Polynomial::to_string(const Chart& chart) const {
  if (terms_.empty()) return "0";
  std::string out;
  // grlex-descending, the conventional reading order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar coeff = c;
    bool neg = coeff.print_negative() && coeff.is_real();
    if (neg) coeff = -coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    if (m.p > 0) vars += chart.v1 + (m.p > 1 ? "^" + std::to_string(m.p) : "");
    if (m.q > 0) {
      if (!vars.empty()) vars += "*";
      vars += chart.v2 + (m.q > 1 ? "^" + std::to_string(m.q) : "");
    }
    if (vars.empty()) {
      out += coeff.to_string();
    } else if (coeff.is_one()) {
      out += vars;
    } else if (coeff == Scalar::i()) {
      out += "i*" + vars;
    } else {
      out += coeff.to_string() + "*" + vars;
    }
  }
  return out;
}

}  // namespace holoconn
