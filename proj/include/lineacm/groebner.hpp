#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace lineacm {

/// Reduced Groebner basis: monic, interreduced, sorted by decreasing leading
/// monomial. Unique for a given (ideal, order), so equality of bases is equality
/// of ideals. The zero ideal has no generators; the unit ideal is {1}.
template <Field F>
class GroebnerBasis {
 public:
  explicit GroebnerBasis(MonomialOrder order = MonomialOrder::degrevlex()) : order_(order) {}

  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  MonomialOrder order() const { return order_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.gens_ == b.gens_;
  }

  /// Adopts polynomials that already form a reduced basis (sorted, monic).
  static GroebnerBasis adopt(std::vector<Polynomial<F>> reduced, MonomialOrder order) {
    GroebnerBasis gb(order);
    gb.gens_ = std::move(reduced);
    return gb;
  }

 private:
  std::vector<Polynomial<F>> gens_;
  MonomialOrder order_;
};

namespace detail {

/// Remainder of `f` after full reduction by `reducers` (every term, not just the
/// leading one). Reducers must be nonzero and share f's order.
template <Field F>
Polynomial<F> reduce_full(const Polynomial<F>& f, std::span<const Polynomial<F>* const> reducers) {
  const MonomialOrder order = f.order();
  std::vector<Term<F>> cur = f.terms();
  std::vector<Term<F>> rem;
  std::size_t k = 0;
  while (k < cur.size()) {
    const Polynomial<F>* g = nullptr;
    for (const Polynomial<F>* r : reducers)
      if (r->leading_monomial().divides(cur[k].mono)) {
        g = r;
        break;
      }
    if (g == nullptr) {
      rem.push_back(std::move(cur[k]));
      ++k;
      continue;
    }
    // cur[k..] - c*q*g, skipping g's leading term which cancels cur[k].
    const Monomial q = cur[k].mono / g->leading_monomial();
    const F c = cur[k].coeff / g->leading_coefficient();
    const auto& gt = g->terms();
    std::vector<Term<F>> next;
    next.reserve(cur.size() - k + gt.size());
    std::size_t i = k + 1, j = 1;
    while (i < cur.size() || j < gt.size()) {
      if (j == gt.size()) {
        next.push_back(std::move(cur[i++]));
        continue;
      }
      Monomial mj = gt[j].mono * q;
      int cmp = i == cur.size() ? -1 : order.compare(cur[i].mono, mj);
      if (cmp > 0) {
        next.push_back(std::move(cur[i++]));
      } else if (cmp < 0) {
        next.push_back({mj, -(gt[j].coeff * c)});
        ++j;
      } else {
        F v = cur[i].coeff - gt[j].coeff * c;
        if (!v.is_zero()) next.push_back({mj, std::move(v)});
        ++i;
        ++j;
      }
    }
    cur = std::move(next);
    k = 0;
  }
  return Polynomial<F>::from_sorted_terms(std::move(rem), order);
}

template <Field F>
class Buchberger {
 public:
  explicit Buchberger(MonomialOrder order) : order_(order) {}

  void add(const Polynomial<F>& f) {
    Polynomial<F> h = reduce(f.with_order(order_));
    if (h.is_zero()) return;
    insert(h.monic(), h.degree());
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.less(a.lcm, b.lcm))) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();

      const Polynomial<F>& f = basis_[p.i];
      const Polynomial<F>& g = basis_[p.j];
      Polynomial<F> s = f.times_term(p.lcm / f.leading_monomial(), F::from_int(1));
      s = s.minus_term_times(p.lcm / g.leading_monomial(), F::from_int(1), g);
      Polynomial<F> h = reduce(s);
      if (h.is_zero()) continue;
      insert(h.monic(), p.sugar);
    }
  }

  std::vector<Polynomial<F>> reduced_basis() const {
    std::vector<const Polynomial<F>*> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) live.push_back(&basis_[k]);
    std::vector<Polynomial<F>> out;
    out.reserve(live.size());
    for (std::size_t k = 0; k < live.size(); ++k) {
      std::vector<const Polynomial<F>*> others;
      for (std::size_t l = 0; l < live.size(); ++l)
        if (l != k) others.push_back(live[l]);
      out.push_back(reduce_full<F>(*live[k], others).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
  };

  Polynomial<F> reduce(const Polynomial<F>& f) const {
    std::vector<const Polynomial<F>*> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) live.push_back(&basis_[k]);
    return reduce_full<F>(f, live);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, Monomial l) const {
    unsigned si = sugar_[i] + l.degree() - basis_[i].leading_monomial().degree();
    unsigned sj = sugar_[j] + l.degree() - basis_[j].leading_monomial().degree();
    return std::max(si, sj);
  }

  // Gebauer-Moeller installation of a new element: Buchberger's coprime
  // criterion plus the chain criterion on both new and old pairs.
  void insert(Polynomial<F> h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) {
        Monomial l = lcm(basis_[g].leading_monomial(), lh);
        candidates.push_back({g, hi, l, pair_sugar(g, hi, l)});
      }

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(basis_[p.i].leading_monomial(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> fresh;
    for (const Pair& p : kept)
      if (!coprime(basis_[p.i].leading_monomial(), lh)) fresh.push_back(p);

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(basis_[p.i].leading_monomial(), lh) != p.lcm &&
                  lcm(basis_[p.j].leading_monomial(), lh) != p.lcm;
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  MonomialOrder order_;
  std::vector<Polynomial<F>> basis_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` under `order`
/// (Buchberger with sugar selection and Gebauer-Moeller pair pruning).
template <Field F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, MonomialOrder order = MonomialOrder::degrevlex()) {
  std::vector<Polynomial<F>> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g.with_order(order));
  if (sorted.empty()) return GroebnerBasis<F>(order);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  detail::Buchberger<F> engine(order);
  for (const auto& g : sorted) engine.add(g);
  engine.run();
  return GroebnerBasis<F>::adopt(engine.reduced_basis(), order);
}

template <Field F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder order = MonomialOrder::degrevlex()) {
  return buchberger<F>(std::span<const Polynomial<F>>(gens), order);
}

/// Remainder of full multivariate division by the basis; zero iff f is in the ideal.
template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  std::vector<const Polynomial<F>*> reducers;
  for (const auto& g : gb.generators()) reducers.push_back(&g);
  return detail::reduce_full<F>(f.with_order(gb.order()), reducers);
}

/// Basis elements free of the `front` variables: generators of the contraction of
/// the ideal to the remaining variables. The basis must come from an order that
/// eliminates `front`.
template <Field F>
std::vector<Polynomial<F>> eliminate(const GroebnerBasis<F>& gb, VarMask front) {
  if (!gb.order().eliminates(front))
    throw ContractError("eliminate: basis order " + gb.order().to_string() + " does not eliminate the requested variables");
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.generators())
    if ((g.support() & front) == 0) out.push_back(g);
  return out;
}

}  // namespace lineacm
