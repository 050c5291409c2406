#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace lineacm {

/// Ambient ring and grading an ideal lives in.
enum class Grading {
  bigraded_p1xp2,  // k[s,t,x,y,z], deg s,t = (1,0), deg x,y,z = (0,1)
  standard_p4,     // k[s,t,x,y,z]
  standard_p3,     // k[s,t,x,y]
  standard_p2,     // k[x,y,z]
};

constexpr VarMask ambient_vars(Grading g) {
  switch (g) {
    case Grading::bigraded_p1xp2:
    case Grading::standard_p4:
      return kMaskSTXYZ;
    case Grading::standard_p3:
      return kMaskSTXY;
    case Grading::standard_p2:
      return kMaskXYZ;
  }
  return 0;
}

inline std::string to_string(Grading g) {
  switch (g) {
    case Grading::bigraded_p1xp2:
      return "P1xP2";
    case Grading::standard_p4:
      return "P4";
    case Grading::standard_p3:
      return "P3";
    case Grading::standard_p2:
      return "P2";
  }
  return "?";
}

namespace detail {

/// Turns a (not necessarily reduced) Groebner basis into the reduced one.
template <Field F>
std::vector<Polynomial<F>> interreduce_basis(std::vector<Polynomial<F>> gb, MonomialOrder order) {
  std::vector<Polynomial<F>> minimal;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    Monomial lm = gb[k].leading_monomial();
    bool redundant = false;
    for (std::size_t l = 0; l < gb.size() && !redundant; ++l) {
      if (l == k) continue;
      Monomial other = gb[l].leading_monomial();
      // Among equal leading monomials keep the first.
      if (other.divides(lm) && (other != lm || l < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(gb[k]);
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Polynomial<F>*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(&minimal[l]);
    out.push_back(reduce_full<F>(minimal[k], others).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

template <Field F>
struct GbCache {
  std::mutex mutex;
  std::shared_ptr<const GroebnerBasis<F>> gb;
};

}  // namespace detail

/// Homogeneous ideal with a lazily computed, shared degrevlex Groebner basis.
/// Values are immutable; the basis memo is safe to populate from several threads
/// (a racing reader may compute it twice but every reader sees the same basis).
template <Field F>
class Ideal {
 public:
  Ideal(std::vector<Polynomial<F>> gens, Grading grading)
      : grading_(grading), cache_(std::make_shared<detail::GbCache<F>>()) {
    const VarMask ambient = ambient_vars(grading);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if ((g.support() & ~ambient) != 0)
        throw ContractError("generator " + g.to_string() + " leaves the ambient ring of " + lineacm::to_string(grading));
      if (grading == Grading::bigraded_p1xp2) {
        if (!bidegree_of(g)) throw DomainError("generator " + g.to_string() + " is not bihomogeneous");
      } else if (!g.is_homogeneous()) {
        throw DomainError("generator " + g.to_string() + " is not homogeneous");
      }
      gens_.push_back(g.with_order(MonomialOrder::degrevlex()));
    }
  }

  static Ideal unit(Grading grading) {
    return Ideal({Polynomial<F>::constant(F::from_int(1))}, grading);
  }
  static Ideal zero(Grading grading) { return Ideal({}, grading); }

  /// Ideal whose generators are a reduced degrevlex basis already known.
  static Ideal from_basis(std::vector<Polynomial<F>> reduced, Grading grading) {
    Ideal I(reduced, grading);
    I.cache_->gb = std::make_shared<const GroebnerBasis<F>>(
        GroebnerBasis<F>::adopt(std::move(reduced), MonomialOrder::degrevlex()));
    return I;
  }

  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  Grading grading() const { return grading_; }
  VarMask ambient() const { return ambient_vars(grading_); }

  /// Reduced degrevlex Groebner basis.
  const GroebnerBasis<F>& groebner() const {
    {
      std::lock_guard lock(cache_->mutex);
      if (cache_->gb) return *cache_->gb;
    }
    auto gb = std::make_shared<const GroebnerBasis<F>>(buchberger<F>(gens_));
    std::lock_guard lock(cache_->mutex);
    if (!cache_->gb) cache_->gb = std::move(gb);
    return *cache_->gb;
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f, groebner()).is_zero(); }

  bool contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const auto& g) { return contains(g); });
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return groebner().is_unit_ideal(); }

  /// Same generators, viewed in another ambient ring (checked).
  Ideal with_grading(Grading grading) const {
    Ideal I(gens_, grading);
    std::lock_guard lock(cache_->mutex);
    I.cache_->gb = cache_->gb;
    return I;
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.grading_ == b.grading_ && a.groebner() == b.groebner();
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) out += (k ? ", " : "") + gens_[k].to_string();
    return out + ")";
  }

 private:
  std::vector<Polynomial<F>> gens_;
  Grading grading_;
  std::shared_ptr<detail::GbCache<F>> cache_;
};

namespace detail {

template <Field F>
void require_same_ring(const Ideal<F>& I, const Ideal<F>& J, const char* op) {
  if (I.grading() != J.grading())
    throw ContractError(std::string(op) + ": ideals live in different rings (" + to_string(I.grading()) + " vs " +
                        to_string(J.grading()) + ")");
}

template <Field F>
Ideal<F> principal(const Polynomial<F>& f, Grading grading) {
  return Ideal<F>({f}, grading);
}

}  // namespace detail

/// Ideal generated by the listed variables.
template <Field F>
Ideal<F> variables_ideal(VarMask vars, Grading grading) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (vars & (1u << i)) gens.push_back(Polynomial<F>::variable(static_cast<Var>(i)));
  return Ideal<F>(std::move(gens), grading);
}

template <Field F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
  detail::require_same_ring(I, J, "ideal_sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal<F>(std::move(gens), I.grading());
}

template <Field F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Polynomial<F>& f) {
  auto gens = I.generators();
  gens.push_back(f);
  return Ideal<F>(std::move(gens), I.grading());
}

template <Field F>
Ideal<F> ideal_product(const Ideal<F>& I, const Ideal<F>& J) {
  detail::require_same_ring(I, J, "ideal_product");
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) {
      Polynomial<F> p = (f * g).monic();
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  return Ideal<F>(std::move(gens), I.grading());
}

/// I^k by iterated products, interreduced to the reduced basis after each step.
template <Field F>
Ideal<F> ideal_power(const Ideal<F>& I, int k) {
  if (k < 1) throw DomainError("ideal_power: exponent must be at least 1, got " + std::to_string(k));
  Ideal<F> acc = I;
  for (int e = 1; e < k; ++e) {
    Ideal<F> next = ideal_product(acc, I);
    acc = Ideal<F>::from_basis(next.groebner().generators(), I.grading());
  }
  return acc;
}

/// I ∩ J as the w-free part of a Groebner basis of w*I + (1-w)*J under an order
/// eliminating w. The auxiliary w has bidegree (0,0), so bihomogeneity survives.
template <Field F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J) {
  detail::require_same_ring(I, J, "ideal_intersection");
  if (I.is_zero() || J.is_zero()) return Ideal<F>::zero(I.grading());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  const MonomialOrder elim = MonomialOrder::elimination(kMaskAux);
  const auto w = Polynomial<F>::variable(Var::w, elim);
  const auto one_minus_w = Polynomial<F>::constant(F::from_int(1), elim) - w;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.groebner().generators()) gens.push_back(w * g.with_order(elim));
  for (const auto& h : J.groebner().generators()) gens.push_back(one_minus_w * h.with_order(elim));
  GroebnerBasis<F> gb = buchberger<F>(gens, elim);
  std::vector<Polynomial<F>> contracted;
  for (auto& g : eliminate(gb, kMaskAux)) contracted.push_back(g.with_order(MonomialOrder::degrevlex()));
  return Ideal<F>::from_basis(std::move(contracted), I.grading());
}

/// I : f = { g : g*f in I }, via (I ∩ (f)) / f.
template <Field F>
Ideal<F> ideal_colon(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) throw DomainError("ideal_colon: divisor must be nonzero");
  if (I.is_unit()) return I;
  Ideal<F> meet = ideal_intersection(I, detail::principal(f, I.grading()));
  const auto fo = f.with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial<F>> quotients;
  for (const auto& g : meet.generators()) quotients.push_back(divide_exact(g, fo));
  // Dividing a Groebner basis of I ∩ (f) by f gives a Groebner basis of I : f.
  return Ideal<F>::from_basis(detail::interreduce_basis(std::move(quotients), MonomialOrder::degrevlex()),
                              I.grading());
}

/// I : J as the intersection of the colons by the generators of J.
template <Field F>
Ideal<F> ideal_colon(const Ideal<F>& I, const Ideal<F>& J) {
  detail::require_same_ring(I, J, "ideal_colon");
  if (J.is_zero()) return Ideal<F>::unit(I.grading());
  std::optional<Ideal<F>> acc;
  for (const auto& g : J.generators()) {
    Ideal<F> c = ideal_colon(I, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  return *acc;
}

/// Irrelevant ideal of the ambient space: (s,t) ∩ (x,y,z) for P1xP2, the ideal of
/// all variables for projective space.
template <Field F>
Ideal<F> irrelevant_ideal(Grading grading) {
  if (grading == Grading::bigraded_p1xp2)
    return ideal_intersection(variables_ideal<F>(kMaskST, grading), variables_ideal<F>(kMaskXYZ, grading));
  return variables_ideal<F>(ambient_vars(grading), grading);
}

/// I : T^∞ as the fixpoint of I <- I : T.
template <Field F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& T) {
  Ideal<F> cur = I;
  while (true) {
    Ideal<F> next = ideal_colon(cur, T);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// True iff I : T = I. A generator g of T with I : g = I settles it early, since
/// I : T ⊆ I : g.
template <Field F>
bool is_saturated(const Ideal<F>& I, const Ideal<F>& T) {
  detail::require_same_ring(I, T, "is_saturated");
  if (I.is_unit()) return true;
  std::vector<Ideal<F>> colons;
  for (const auto& g : T.generators()) {
    Ideal<F> c = ideal_colon(I, g);
    if (c == I) return true;
    colons.push_back(std::move(c));
  }
  if (colons.empty()) return true;
  Ideal<F> acc = colons.front();
  for (std::size_t k = 1; k < colons.size(); ++k) acc = ideal_intersection(acc, colons[k]);
  return acc == I;
}

template <Field F>
struct MinimalGenerator {
  Polynomial<F> poly;
  Bidegree bidegree;
};

/// A minimal generating set made of bihomogeneous elements: greedy trimming in
/// increasing total degree, then interreduction. The multiset of bidegrees is an
/// invariant of the ideal even though the generators are not.
template <Field F>
std::vector<MinimalGenerator<F>> minimal_generators(const Ideal<F>& I) {
  std::vector<Polynomial<F>> cand;
  for (const auto& g : I.generators()) {
    if (!bidegree_of(g)) throw ContractError("minimal_generators: generator " + g.to_string() + " is not bihomogeneous");
    cand.push_back(g.monic());
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial<F>> kept;
  std::optional<GroebnerBasis<F>> gb;
  for (const auto& g : cand) {
    if (!kept.empty()) {
      if (!gb) gb = buchberger<F>(kept);
      if (normal_form(g, *gb).is_zero()) continue;
    }
    kept.push_back(g);
    gb.reset();
  }
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<const Polynomial<F>*> others;
    for (std::size_t l = 0; l < kept.size(); ++l)
      if (l != k) others.push_back(&kept[l]);
    kept[k] = detail::reduce_full<F>(kept[k], others).monic();
  }
  std::vector<MinimalGenerator<F>> out;
  for (auto& g : kept) out.push_back({g, *bidegree_of(g)});
  return out;
}

/// Krull dimension of R/I from the leading-term ideal: the size of a largest set
/// of ambient variables containing the support of no leading monomial. -1 for the
/// unit ideal.
template <Field F>
int krull_dimension(const Ideal<F>& I) {
  const auto& gb = I.groebner();
  if (gb.is_unit_ideal()) return -1;
  const VarMask ambient = I.ambient();
  const auto lms = gb.leading_monomials();
  int best = 0;
  for (unsigned subset = 0; subset < (1u << kNumVars); ++subset) {
    if ((subset & ~ambient) != 0) continue;
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(lms.begin(), lms.end(), [&](Monomial m) { return (m.support() & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace lineacm
