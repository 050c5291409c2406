#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace lineacm {

template <Field F>
struct Term {
  Monomial mono;
  F coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in s,t,x,y,z (and the internal w) with terms kept strictly
/// decreasing under `order()` and no zero coefficients, so equality is term-list
/// equality.
template <Field F>
class Polynomial {
 public:
  using Coefficient = F;

  Polynomial() = default;
  explicit Polynomial(MonomialOrder order) : order_(order) {}

  static Polynomial constant(const F& c, MonomialOrder order = MonomialOrder::degrevlex()) {
    return monomial(Monomial(), c, order);
  }

  static Polynomial variable(Var v, MonomialOrder order = MonomialOrder::degrevlex()) {
    return monomial(Monomial::var(v), F::from_int(1), order);
  }

  static Polynomial monomial(Monomial m, const F& c, MonomialOrder order = MonomialOrder::degrevlex()) {
    Polynomial p(order);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(std::vector<Term<F>> terms, MonomialOrder order = MonomialOrder::degrevlex()) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order.compare(a.mono, b.mono) > 0; });
    Polynomial p(order);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Adopts terms that are already strictly decreasing under `order` with no
  /// zero coefficients. Not checked.
  static Polynomial from_sorted_terms(std::vector<Term<F>> terms, MonomialOrder order) {
    Polynomial p(order);
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term<F>>& terms() const { return terms_; }
  MonomialOrder order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term<F>& leading_term() const { return terms_.front(); }
  Monomial leading_monomial() const { return terms_.front().mono; }
  const F& leading_coefficient() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term<F>& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  VarMask support() const {
    VarMask m = 0;
    for (const auto& t : terms_) m |= t.mono.support();
    return m;
  }

  bool involves(Var v) const { return (support() & mask_of(v)) != 0; }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    Polynomial p(order);
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order.compare(a.mono, b.mono) > 0; });
    return p;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coefficient() == F::from_int(1)) return *this;
    return scaled(leading_coefficient().inverse());
  }

  Polynomial scaled(const F& c) const {
    if (c.is_zero()) return Polynomial(order_);
    Polynomial p(order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
  }

  /// c * m * this.
  Polynomial times_term(Monomial m, const F& c) const {
    if (c.is_zero()) return Polynomial(order_);
    Polynomial p(order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
  }

  /// this - c * m * g, one merge pass.
  Polynomial minus_term_times(Monomial m, const F& c, const Polynomial& g) const {
    check_order(g);
    Polynomial out(order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end()) {
        out.terms_.push_back(*i++);
        continue;
      }
      Monomial mj = j->mono * m;
      int cmp = i == terms_.end() ? -1 : order_.compare(i->mono, mj);
      if (cmp > 0) {
        out.terms_.push_back(*i++);
      } else if (cmp < 0) {
        out.terms_.push_back({mj, -(j->coeff * c)});
        ++j;
      } else {
        F v = i->coeff - j->coeff * c;
        if (!v.is_zero()) out.terms_.push_back({mj, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = merge(*this, g, false); }
  Polynomial& operator-=(const Polynomial& g) { return *this = merge(*this, g, true); }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return merge(f, g, false); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return merge(f, g, true); }
  Polynomial operator-() const { return scaled(-F::from_int(1)); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_order(g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.order_);
    const Polynomial& small = f.size() <= g.size() ? f : g;
    const Polynomial& big = f.size() <= g.size() ? g : f;
    Polynomial acc(f.order_);
    for (const auto& t : small.terms_) acc = acc.minus_term_times(t.mono, -t.coeff, big);
    return acc;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.order_ == g.order_ && f.terms_ == g.terms_;
  }

  /// Value at a point given by one coordinate per variable.
  F evaluate(const std::array<F, kNumVars>& point) const {
    F acc;
    for (const auto& t : terms_) {
      F v = t.coeff;
      for (std::size_t i = 0; i < kNumVars; ++i)
        for (unsigned e = t.mono.exponent(i); e > 0; --e) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Terms joined by ` + ` / ` - `, e.g. `s^2*t*x + s*t^2*x`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const F one = F::from_int(1);
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& [m, c] = terms_[k];
      std::string cs = c.to_string();
      bool neg = cs.front() == '-';
      if (neg) cs.erase(0, 1);
      if (k == 0)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      bool unit = c == one || c == -one;
      if (m.is_one())
        out += cs;
      else if (unit)
        out += m.to_string();
      else
        out += cs + "*" + m.to_string();
    }
    return out;
  }

 private:
  void check_order(const Polynomial& g) const {
    if (!(g.order_ == order_))
      throw ContractError("polynomial orders differ: " + order_.to_string() + " vs " + g.order_.to_string());
  }

  static Polynomial merge(const Polynomial& f, const Polynomial& g, bool subtract) {
    F c = subtract ? F::from_int(1) : -F::from_int(1);
    return f.minus_term_times(Monomial(), c, g);
  }

  std::vector<Term<F>> terms_;
  MonomialOrder order_ = MonomialOrder::degrevlex();
};

/// Bidegree (a,b) if every term has bidegree (a,b), nullopt if the terms disagree.
/// The zero polynomial has no degree.
template <Field F>
std::optional<Bidegree> bidegree_of(const Polynomial<F>& f) {
  if (f.is_zero()) throw DomainError("bidegree of the zero polynomial is undefined");
  Bidegree d = f.leading_monomial().bidegree();
  for (const auto& t : f.terms())
    if (t.mono.bidegree() != d) return std::nullopt;
  return d;
}

/// f with `var` replaced by `expr`; `expr` must not mention `var`.
template <Field F>
Polynomial<F> substitute_linear(const Polynomial<F>& f, Var var, const Polynomial<F>& expr) {
  if (expr.involves(var))
    throw ContractError(std::string("substitution cycle: replacement mentions ") + kVarNames[static_cast<int>(var)]);
  if (expr.degree() > 1) throw DomainError("substitute_linear expects a replacement of degree at most 1");
  MonomialOrder order = f.order();
  Polynomial<F> e = expr.with_order(order);
  std::vector<Polynomial<F>> powers{Polynomial<F>::constant(F::from_int(1), order)};
  std::vector<Term<F>> collected;
  for (const auto& t : f.terms()) {
    unsigned k = t.mono.exponent(var);
    while (powers.size() <= k) powers.push_back(powers.back() * e);
    Monomial rest = t.mono / Monomial::var(var, k);
    for (const auto& u : powers[k].terms()) collected.push_back({rest * u.mono, t.coeff * u.coeff});
  }
  return Polynomial<F>::from_terms(std::move(collected), order);
}

/// Applies an injective renaming of variables (`image[i]` is the new variable of
/// variable i). Used to move sections into the standard variable slots.
template <Field F>
Polynomial<F> rename_variables(const Polynomial<F>& f, const std::array<Var, kNumVars>& image) {
  std::vector<Term<F>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::array<unsigned, kNumVars> e{};
    for (std::size_t i = 0; i < kNumVars; ++i) e[static_cast<std::size_t>(image[i])] += t.mono.exponent(i);
    terms.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return Polynomial<F>::from_terms(std::move(terms), f.order());
}

/// Exact quotient f / g; throws if g does not divide f.
template <Field F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial<F> rem = f.with_order(g.order());
  std::vector<Term<F>> quotient;
  const F inv = g.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    Monomial lm = rem.leading_monomial();
    if (!g.leading_monomial().divides(lm)) throw DomainError("divide_exact: divisor does not divide dividend");
    Monomial q = lm / g.leading_monomial();
    F c = rem.leading_coefficient() * inv;
    quotient.push_back({q, c});
    rem = rem.minus_term_times(q, c, g);
  }
  return Polynomial<F>::from_terms(std::move(quotient), g.order());
}

}  // namespace lineacm
