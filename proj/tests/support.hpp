#pragma once

// Independent reference computations for the tests. Nothing here goes through
// Groebner bases: ideal membership and Hilbert functions are decided degree by
// degree with dense linear algebra on the span of monomial multiples.

#include <lineacm/lineacm.hpp>

#include <array>
#include <map>
#include <string_view>
#include <vector>

namespace lineacm::testing {

using Exps = std::array<unsigned, kNumVars>;

inline Exps exps_of(Monomial m) {
  Exps e{};
  for (std::size_t i = 0; i < kNumVars; ++i) e[i] = m.exponent(i);
  return e;
}

inline void monomials_rec(const std::vector<std::size_t>& vars, std::size_t k, unsigned left, Exps& cur,
                          std::vector<Monomial>& out) {
  if (k + 1 == vars.size()) {
    cur[vars[k]] = left;
    out.push_back(Monomial::from_exponents(cur));
    cur[vars[k]] = 0;
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur[vars[k]] = e;
    monomials_rec(vars, k + 1, left - e, cur, out);
  }
  cur[vars[k]] = 0;
}

inline std::vector<Monomial> monomials_of_degree(VarMask vars, unsigned d) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (vars & (1u << i)) idx.push_back(i);
  std::vector<Monomial> out;
  if (idx.empty()) {
    if (d == 0) out.push_back(Monomial());
    return out;
  }
  Exps cur{};
  monomials_rec(idx, 0, d, cur, out);
  return out;
}

template <Field F>
Polynomial<F> poly(std::string_view text) {
  return parse_polynomial<F>(text, kMaskSTXYZ | kMaskAux);
}

template <Field F>
std::vector<Polynomial<F>> polys(std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial<F>> out;
  for (auto t : texts) out.push_back(poly<F>(t));
  return out;
}

/// Product by convolution of exponent vectors.
template <Field F>
Polynomial<F> naive_product(const Polynomial<F>& f, const Polynomial<F>& g) {
  std::map<Exps, F> acc;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      Exps e = exps_of(a.mono);
      Exps eb = exps_of(b.mono);
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] += eb[i];
      acc[e] += a.coeff * b.coeff;
    }
  std::vector<Term<F>> terms;
  for (const auto& [e, c] : acc)
    if (!c.is_zero()) terms.push_back({Monomial::from_exponents(e), c});
  return Polynomial<F>::from_terms(std::move(terms), f.order());
}

/// The degree-d piece I_d of a homogeneous ideal, as a row-reduced basis of the
/// span of {m * g : deg m + deg g = d}.
template <Field F>
class DegreePiece {
 public:
  DegreePiece(const std::vector<Polynomial<F>>& gens, VarMask vars, unsigned d) {
    cols_ = monomials_of_degree(vars, d);
    for (std::size_t k = 0; k < cols_.size(); ++k) index_[cols_[k].bits()] = k;
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > d) continue;
      for (Monomial m : monomials_of_degree(vars, d - g.degree())) insert(to_row(g.times_term(m, F::from_int(1))));
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return cols_.size(); }
  long quotient_dimension() const { return static_cast<long>(cols_.size() - rows_.size()); }

  bool contains(const Polynomial<F>& f) const {
    auto r = to_row(f);
    reduce(r);
    return std::all_of(r.begin(), r.end(), [](const F& c) { return c.is_zero(); });
  }

 private:
  std::vector<F> to_row(const Polynomial<F>& f) const {
    std::vector<F> r(cols_.size());
    for (const auto& t : f.terms()) r[index_.at(t.mono.bits())] = t.coeff;
    return r;
  }

  void reduce(std::vector<F>& r) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F c = r[pivots_[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * rows_[k][j];
    }
  }

  void insert(std::vector<F> r) {
    reduce(r);
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p == r.size()) return;
    const F inv = r[p].inverse();
    for (auto& c : r) c *= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F c = rows_[k][p];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < r.size(); ++j) rows_[k][j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
  }

  std::vector<Monomial> cols_;
  std::map<std::uint64_t, std::size_t> index_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// dim (R/I)_d by linear algebra.
template <Field F>
long naive_hilbert(const std::vector<Polynomial<F>>& gens, VarMask vars, unsigned d) {
  return DegreePiece<F>(gens, vars, d).quotient_dimension();
}

/// Membership of a homogeneous f, decided in degree deg f.
template <Field F>
bool naive_contains(const std::vector<Polynomial<F>>& gens, VarMask vars, const Polynomial<F>& f) {
  if (f.is_zero()) return true;
  return DegreePiece<F>(gens, vars, f.degree()).contains(f);
}

template <Field F>
LinearForm<F> a_form(std::string_view text) {
  return form10(poly<F>(text));
}

template <Field F>
LinearForm<F> b_form(std::string_view text) {
  return form01(poly<F>(text));
}

template <Field F>
HorizontalLine<F> H(std::string_view a, std::string_view b, int m = 1) {
  return {a_form<F>(a), b_form<F>(b), m};
}

template <Field F>
VerticalLine<F> V(std::string_view b, std::string_view bp, int m = 1) {
  return VerticalLine<F>(b_form<F>(b), b_form<F>(bp), m);
}

template <Field F>
Configuration<F> liaison_config() {
  return Configuration<F>::make({H<F>("s", "x"), H<F>("s", "y"), H<F>("t", "x"), H<F>("t", "y"), H<F>("t", "z"),
                                 H<F>("t", "x + y + z"), H<F>("s + t", "y")},
                                {V<F>("x", "y")});
}

template <Field F>
Configuration<F> three_lines_config() {
  return Configuration<F>::make({H<F>("s", "x"), H<F>("t", "y")}, {V<F>("x", "y")});
}

template <Field F>
Configuration<F> x_config(int m) {
  return Configuration<F>::make({H<F>("s", "x"), H<F>("s", "y"), H<F>("t", "x + y")}, {V<F>("x", "y", m)});
}

template <Field F>
Configuration<F> hat_example_config() {
  return Configuration<F>::make({H<F>("t", "x"), H<F>("s", "y")}, {});
}

/// The five points of the base case: four on (x+y)(x+2y)(x+3y)(x+4y), one off it.
template <Field F>
FatPointsP2<F> five_points() {
  FatPointsP2<F> Y;
  for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, -1}, {2, -1}, {6, -2}, {8, -2}, {1, 1}})
    Y.add(P2Point<F>::normalized({F::from_int(a), F::from_int(b), F::from_int(1)}));
  return Y;
}

template <Field F>
Polynomial<F> quartic() {
  return poly<F>("x^4 + 10*x^3*y + 35*x^2*y^2 + 50*x*y^3 + 24*y^4");
}

inline std::vector<Bidegree> sorted(std::vector<Bidegree> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace lineacm::testing
