#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "random.hpp"

namespace lineacm {

/// Nonzero linear form in a fixed block of variables, kept monic so that
/// equality is proportionality.
template <Field F>
class LinearForm {
 public:
  LinearForm() = default;

  /// Throws DomainError unless f is a nonzero linear form supported in `block`.
  static LinearForm from_polynomial(const Polynomial<F>& f, VarMask block) {
    if (f.is_zero()) throw DomainError("linear form must be nonzero");
    if (f.degree() != 1 || !f.is_homogeneous())
      throw DomainError("expected a linear form, got " + f.to_string());
    if ((f.support() & ~block) != 0)
      throw DomainError("linear form " + f.to_string() + " uses variables outside " + block_name(block));
    LinearForm l;
    l.poly_ = f.with_order(MonomialOrder::degrevlex()).monic();
    l.block_ = block;
    return l;
  }

  const Polynomial<F>& polynomial() const { return poly_; }
  VarMask block() const { return block_; }

  F coefficient(Var v) const {
    for (const auto& t : poly_.terms())
      if (t.mono == Monomial::var(v)) return t.coeff;
    return F();
  }

  /// Coefficients of x, y, z.
  std::array<F, 3> xyz() const { return {coefficient(Var::x), coefficient(Var::y), coefficient(Var::z)}; }

  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.poly_ == b.poly_; }

 private:
  static std::string block_name(VarMask block) {
    std::string s;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (block & (1u << i)) s += (s.empty() ? "" : ",") + std::string(1, kVarNames[i]);
    return s;
  }

  Polynomial<F> poly_;
  VarMask block_ = 0;
};

template <Field F>
LinearForm<F> form10(const Polynomial<F>& f) {
  return LinearForm<F>::from_polynomial(f, kMaskST);
}

template <Field F>
LinearForm<F> form01(const Polynomial<F>& f) {
  return LinearForm<F>::from_polynomial(f, kMaskXYZ);
}

/// Point of P^2 with homogeneous coordinates normalized so the first nonzero one is 1.
template <Field F>
struct P2Point {
  std::array<F, 3> coords;

  static P2Point normalized(std::array<F, 3> c) {
    std::size_t k = 0;
    while (k < 3 && c[k].is_zero()) ++k;
    if (k == 3) throw DomainError("the zero vector is not a point of P^2");
    F inv = c[k].inverse();
    for (auto& v : c) v *= inv;
    return {c};
  }

  std::string to_string() const {
    return "(" + coords[0].to_string() + ":" + coords[1].to_string() + ":" + coords[2].to_string() + ")";
  }

  friend bool operator==(const P2Point&, const P2Point&) = default;
};

/// Value of a form in x,y,z at a point of P^2 (zero or not is well defined).
template <Field F>
F evaluate_at(const LinearForm<F>& B, const P2Point<F>& p) {
  auto c = B.xyz();
  return c[0] * p.coords[0] + c[1] * p.coords[1] + c[2] * p.coords[2];
}

/// Common zero of two forms in x,y,z; nullopt when they are proportional.
template <Field F>
std::optional<P2Point<F>> common_zero(const LinearForm<F>& B, const LinearForm<F>& Bp) {
  auto a = B.xyz();
  auto b = Bp.xyz();
  std::array<F, 3> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) return std::nullopt;
  return P2Point<F>::normalized(c);
}

/// Two independent forms in x,y,z vanishing at (a:b:c).
template <Field F>
std::pair<LinearForm<F>, LinearForm<F>> forms_through(const P2Point<F>& p) {
  using P = Polynomial<F>;
  const auto& [a, b, c] = p.coords;
  P x = P::variable(Var::x), y = P::variable(Var::y), z = P::variable(Var::z);
  if (!c.is_zero()) return {form01(x.scaled(c) - z.scaled(a)), form01(y.scaled(c) - z.scaled(b))};
  if (!b.is_zero()) return {form01(x.scaled(b) - y.scaled(a)), form01(z)};
  return {form01(y), form01(z)};
}

/// V(A,B)^m: a point of P^1 times a line of P^2.
template <Field F>
struct HorizontalLine {
  LinearForm<F> A;
  LinearForm<F> B;
  int multiplicity = 1;

  bool same_support(const HorizontalLine& o) const { return A == o.A && B == o.B; }
};

/// V(B,B')^m: P^1 times the point B = B' = 0 of P^2. Only the point matters.
template <Field F>
class VerticalLine {
 public:
  VerticalLine(LinearForm<F> B, LinearForm<F> Bp, int multiplicity = 1)
      : B_(std::move(B)), Bp_(std::move(Bp)), multiplicity_(multiplicity) {
    auto p = common_zero(B_, Bp_);
    if (!p) throw DomainError("vertical line needs independent forms, got " + B_.to_string() + " and " + Bp_.to_string());
    if (multiplicity < 1) throw DomainError("multiplicity must be at least 1");
    point_ = *p;
  }

  const LinearForm<F>& B() const { return B_; }
  const LinearForm<F>& Bp() const { return Bp_; }
  int multiplicity() const { return multiplicity_; }
  const P2Point<F>& point() const { return point_; }

  VerticalLine with_multiplicity(int m) const { return VerticalLine(B_, Bp_, m); }

 private:
  LinearForm<F> B_, Bp_;
  int multiplicity_;
  P2Point<F> point_;
};

/// Z = Z1 ∪ Z2: fat horizontal and vertical lines of P^1 x P^2, no support listed twice.
template <Field F>
class Configuration {
 public:
  Configuration() = default;

  /// Repeated supports are merged at the larger multiplicity; a note is appended
  /// to `warnings` for each merge.
  static Configuration make(std::vector<HorizontalLine<F>> hs, std::vector<VerticalLine<F>> vs,
                            std::vector<std::string>* warnings = nullptr) {
    Configuration z;
    for (auto& h : hs) {
      if (h.multiplicity < 1) throw DomainError("multiplicity must be at least 1");
      auto it = std::find_if(z.h_.begin(), z.h_.end(), [&](const auto& o) { return o.same_support(h); });
      if (it == z.h_.end()) {
        z.h_.push_back(std::move(h));
        continue;
      }
      it->multiplicity = std::max(it->multiplicity, h.multiplicity);
      if (warnings) warnings->push_back("merged duplicate horizontal line V(" + h.A.to_string() + ", " + h.B.to_string() + ")");
    }
    for (auto& v : vs) {
      auto it = std::find_if(z.v_.begin(), z.v_.end(), [&](const auto& o) { return o.point() == v.point(); });
      if (it == z.v_.end()) {
        z.v_.push_back(std::move(v));
        continue;
      }
      *it = it->with_multiplicity(std::max(it->multiplicity(), v.multiplicity()));
      if (warnings) warnings->push_back("merged duplicate vertical line at " + v.point().to_string());
    }
    return z;
  }

  const std::vector<HorizontalLine<F>>& horizontals() const { return h_; }
  const std::vector<VerticalLine<F>>& verticals() const { return v_; }
  bool empty() const { return h_.empty() && v_.empty(); }

  /// Same configuration with vertical i at multiplicity m; m = 0 removes it.
  Configuration with_vertical_multiplicity(std::size_t i, int m) const {
    if (i >= v_.size()) throw DomainError("no vertical line with index " + std::to_string(i));
    Configuration z = *this;
    if (m == 0)
      z.v_.erase(z.v_.begin() + static_cast<long>(i));
    else
      z.v_[i] = z.v_[i].with_multiplicity(m);
    return z;
  }

 private:
  std::vector<HorizontalLine<F>> h_;
  std::vector<VerticalLine<F>> v_;
};

template <Field F>
Ideal<F> ideal_of(const HorizontalLine<F>& h) {
  Ideal<F> I({h.A.polynomial(), h.B.polynomial()}, Grading::bigraded_p1xp2);
  return ideal_power(I, h.multiplicity);
}

template <Field F>
Ideal<F> ideal_of(const VerticalLine<F>& v, Grading grading = Grading::bigraded_p1xp2) {
  Ideal<F> I({v.B().polynomial(), v.Bp().polynomial()}, grading);
  return ideal_power(I, v.multiplicity());
}

template <Field F>
Ideal<F> intersect_all(const std::vector<Ideal<F>>& parts, Grading grading) {
  if (parts.empty()) return Ideal<F>::unit(grading);
  Ideal<F> acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = ideal_intersection(acc, parts[k]);
  return acc;
}

/// I_Z = ∩ I_L^m over all components. The empty configuration gives the unit
/// ideal. With `check_saturated`, a failure of saturation with respect to
/// (s,t) ∩ (x,y,z) raises InconsistencyError.
template <Field F>
Ideal<F> ideal_of_configuration(const Configuration<F>& Z, bool check_saturated = false) {
  std::vector<Ideal<F>> parts;
  for (const auto& h : Z.horizontals()) parts.push_back(ideal_of(h));
  for (const auto& v : Z.verticals()) parts.push_back(ideal_of(v));
  Ideal<F> I = intersect_all(parts, Grading::bigraded_p1xp2);
  if (check_saturated && !is_saturated(I, irrelevant_ideal<F>(Grading::bigraded_p1xp2)))
    throw InconsistencyError("configuration ideal is not saturated");
  return I;
}

struct Violation {
  std::string clause;
  std::string message;
};

/// Structured outcome of a hypothesis check; empty means every clause holds.
struct HypothesisReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& v : violations) out += (out.empty() ? "" : "; ") + ("(" + v.clause + ") " + v.message);
    return out;
  }
};

/// (a) at least one horizontal line and all horizontals reduced; (b) two
/// horizontals with proportional B have proportional A.
template <Field F>
HypothesisReport validate_notation(const Configuration<F>& Z) {
  HypothesisReport r;
  const auto& hs = Z.horizontals();
  if (hs.empty()) r.violations.push_back({"a", "no horizontal lines"});
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i].multiplicity != 1)
      r.violations.push_back({"a", "horizontal " + std::to_string(i) + " has multiplicity " + std::to_string(hs[i].multiplicity)});
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (hs[i].B == hs[j].B && !(hs[i].A == hs[j].A))
        r.violations.push_back({"b", "horizontals " + std::to_string(i) + " and " + std::to_string(j) + " share B = " +
                                         hs[i].B.to_string() + " with different A"});
  return r;
}

/// Every horizontal V(A,B) replaced by V(s,B); verticals kept.
template <Field F>
Configuration<F> hat_of(const Configuration<F>& Z) {
  auto report = validate_notation(Z);
  if (!report.ok())
    throw NotApplicable("hat needs reduced horizontals and equal B only with equal A: " + report.summary());
  const auto s = form10(Polynomial<F>::variable(Var::s));
  std::vector<HorizontalLine<F>> hs;
  for (const auto& h : Z.horizontals()) hs.push_back({s, h.B, h.multiplicity});
  std::vector<std::string> merges;
  auto out = Configuration<F>::make(std::move(hs), Z.verticals(), &merges);
  if (!merges.empty()) throw InconsistencyError("hat produced duplicate horizontals: " + merges.front());
  return out;
}

template <Field F>
bool meets(const HorizontalLine<F>& h, const VerticalLine<F>& v) {
  return evaluate_at(h.B, v.point()).is_zero();
}

/// A point of P^2 where two horizontals with different A and different B cross,
/// with everything passing over it.
template <Field F>
struct Crossing {
  P2Point<F> point;
  std::pair<std::size_t, std::size_t> first_pair;
  std::vector<std::size_t> horizontals;  // every horizontal whose B vanishes here
  std::optional<std::size_t> vertical;
};

/// Crossings in order of their first witnessing pair (i < j, lexicographic).
template <Field F>
std::vector<Crossing<F>> crossings(const Configuration<F>& Z) {
  const auto& hs = Z.horizontals();
  std::vector<Crossing<F>> out;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      if (hs[i].A == hs[j].A || hs[i].B == hs[j].B) continue;
      P2Point<F> p = *common_zero(hs[i].B, hs[j].B);
      if (std::any_of(out.begin(), out.end(), [&](const auto& c) { return c.point == p; })) continue;
      Crossing<F> c{p, {i, j}, {}, std::nullopt};
      for (std::size_t k = 0; k < hs.size(); ++k)
        if (evaluate_at(hs[k].B, p).is_zero()) c.horizontals.push_back(k);
      for (std::size_t k = 0; k < Z.verticals().size(); ++k)
        if (Z.verticals()[k].point() == p) c.vertical = k;
      out.push_back(std::move(c));
    }
  return out;
}

template <Field F>
struct Connectivity {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::optional<P2Point<F>> point;
  int required = 0;  // multiplicity the vertical needs at the witness point
  int found = 0;     // multiplicity present there (0 when absent)
};

namespace detail {

template <Field F>
Connectivity<F> connectivity(const Configuration<F>& Z, bool fully) {
  for (const auto& c : crossings(Z)) {
    int found = c.vertical ? Z.verticals()[*c.vertical].multiplicity() : 0;
    int required = fully ? std::max(1, static_cast<int>(c.horizontals.size()) - 1) : 1;
    if (found < required) return {false, c.first_pair, c.point, required, found};
  }
  return {};
}

}  // namespace detail

/// For every pair of horizontals with A != A' and B != B', the vertical line over
/// their crossing point is in Z.
template <Field F>
Connectivity<F> is_v_connected(const Configuration<F>& Z) {
  return detail::connectivity(Z, false);
}

/// As is_v_connected, and that vertical has multiplicity at least n - 1 where n
/// counts the horizontals it meets.
template <Field F>
Connectivity<F> is_fully_v_connected(const Configuration<F>& Z) {
  return detail::connectivity(Z, true);
}

/// Outcome of the pencil hypotheses plus the data the criterion needs.
template <Field F>
struct PencilData {
  HypothesisReport report;
  int n = 0;
  int m = 0;
  std::optional<P2Point<F>> point;
};

/// Hypotheses of the pencil criterion: one vertical V(B1,B2)^m (or none, read as
/// m = 0 with the pencil of the first two B), reduced horizontals, (1) not all A
/// equal, (2) the B pairwise distinct, (3) every B through the vertical point.
template <Field F>
PencilData<F> pencil_hypotheses(const Configuration<F>& Z) {
  PencilData<F> d;
  auto& v = d.report.violations;
  const auto& hs = Z.horizontals();
  d.n = static_cast<int>(hs.size());
  if (Z.verticals().size() > 1) v.push_back({"0", "more than one vertical line"});
  if (hs.size() < 2) v.push_back({"1", "fewer than two horizontal lines"});
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i].multiplicity != 1) v.push_back({"a", "horizontal " + std::to_string(i) + " is not reduced"});
  if (hs.size() >= 2 && std::all_of(hs.begin(), hs.end(), [&](const auto& h) { return h.A == hs[0].A; }))
    v.push_back({"1", "all horizontals share A"});
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (hs[i].B == hs[j].B) v.push_back({"2", "horizontals " + std::to_string(i) + " and " + std::to_string(j) + " share B"});
  if (Z.verticals().size() == 1) {
    d.m = Z.verticals()[0].multiplicity();
    d.point = Z.verticals()[0].point();
  } else if (Z.verticals().empty() && hs.size() >= 2) {
    d.point = common_zero(hs[0].B, hs[1].B);
  }
  if (d.point)
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (!evaluate_at(hs[i].B, *d.point).is_zero())
        v.push_back({"3", "B of horizontal " + std::to_string(i) + " is not in the pencil"});
  return d;
}

/// Common P^2 point of every component (all horizontal B vanish there and any
/// vertical sits there), if there is one.
template <Field F>
std::optional<P2Point<F>> cone_point(const Configuration<F>& Z) {
  const auto& hs = Z.horizontals();
  const auto& vs = Z.verticals();
  std::optional<P2Point<F>> p;
  if (!vs.empty()) {
    p = vs[0].point();
  } else {
    for (std::size_t j = 1; j < hs.size() && !p; ++j) p = common_zero(hs[0].B, hs[j].B);
  }
  if (!p) return std::nullopt;
  for (const auto& v : vs)
    if (!(v.point() == *p)) return std::nullopt;
  for (const auto& h : hs)
    if (!evaluate_at(h.B, *p).is_zero()) return std::nullopt;
  return p;
}

/// Restriction of polynomials to the hyperplane `form` = 0: one variable of
/// `block` is solved for, and the remaining block variables are renamed onto
/// `targets` in order.
template <Field F>
struct LinearSection {
  Polynomial<F> form;
  Var eliminated = Var::s;
  Polynomial<F> replacement;
  std::array<Var, kNumVars> rename{Var::s, Var::t, Var::x, Var::y, Var::z, Var::w};

  Polynomial<F> apply(const Polynomial<F>& f) const {
    return rename_variables(substitute_linear(f, eliminated, replacement), rename);
  }

  static LinearSection make(const Polynomial<F>& L, VarMask block, std::span<const Var> targets) {
    if (L.is_zero() || L.degree() != 1 || !L.is_homogeneous() || (L.support() & ~block) != 0)
      throw DomainError("section form must be a nonzero linear form in the given variables");
    LinearSection sec;
    sec.form = L;
    std::size_t e = kNumVars;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if ((block & (1u << i)) && (L.support() & (1u << i))) e = i;
    sec.eliminated = static_cast<Var>(e);
    const Monomial me = Monomial::var(sec.eliminated);
    F ce;
    std::vector<Term<F>> rest;
    for (const auto& t : L.terms()) {
      if (t.mono == me)
        ce = t.coeff;
      else
        rest.push_back(t);
    }
    sec.replacement = Polynomial<F>::from_terms(std::move(rest), L.order()).scaled(-ce.inverse());
    std::size_t k = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if ((block & (1u << i)) && i != e) {
        if (k >= targets.size()) throw ContractError("section: not enough target variables");
        sec.rename[i] = targets[k++];
      }
    return sec;
  }
};

/// Section by L = 0 for L in x,y,z, landing in k[s,t,x,y].
template <Field F>
LinearSection<F> xyz_section(const Polynomial<F>& L) {
  static constexpr std::array<Var, 2> kTargets{Var::x, Var::y};
  return LinearSection<F>::make(L, kMaskXYZ, kTargets);
}

/// Componentwise hyperplane section of a cone configuration (all components
/// through one P^2 point p) by L = 0, L in x,y,z, as an ideal of k[s,t,x,y]:
/// ∩ (A_i, B̄_i) ∩ (B̄, B̄')^m. For a cone, L is a non-zerodivisor exactly when
/// L(p) != 0, and then the result equals the section of I_Z itself.
template <Field F>
Ideal<F> hyperplane_section_to_P3(const Configuration<F>& Z, const Polynomial<F>& L) {
  auto p = cone_point(Z);
  if (!p) throw ContractError("componentwise section needs every component through one point of P^2");
  const LinearForm<F> l = form01(L);
  if (evaluate_at(l, *p).is_zero()) throw NonGenericError("section form vanishes at the common point " + p->to_string());
  const auto sec = xyz_section(L);
  std::vector<Ideal<F>> parts;
  for (const auto& h : Z.horizontals())
    parts.push_back(ideal_power(Ideal<F>({h.A.polynomial(), sec.apply(h.B.polynomial())}, Grading::standard_p3),
                                h.multiplicity));
  for (const auto& v : Z.verticals())
    parts.push_back(ideal_power(
        Ideal<F>({sec.apply(v.B().polynomial()), sec.apply(v.Bp().polynomial())}, Grading::standard_p3),
        v.multiplicity()));
  return intersect_all(parts, Grading::standard_p3);
}

/// (I + (L)) / (L) in k[s,t,x,y] for a bigraded I and L in x,y,z, after checking
/// that L is a non-zerodivisor (I : L = I).
template <Field F>
Ideal<F> section_of_ideal_to_P3(const Ideal<F>& I, const Polynomial<F>& L) {
  if (I.grading() != Grading::bigraded_p1xp2) throw ContractError("section_of_ideal_to_P3 expects a bigraded ideal");
  if (!(ideal_colon(I, L) == I)) throw NonGenericError("section form " + L.to_string() + " is a zerodivisor");
  const auto sec = xyz_section(L);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(sec.apply(g));
  return Ideal<F>(std::move(gens), Grading::standard_p3);
}

/// Fat points m_1 P_1 + ... + m_n P_n of P^2, each point given by two forms.
template <Field F>
struct FatPoint {
  LinearForm<F> B;
  LinearForm<F> Bp;
  int multiplicity = 1;
  P2Point<F> point;
};

template <Field F>
class FatPointsP2 {
 public:
  FatPointsP2() = default;

  void add(const LinearForm<F>& B, const LinearForm<F>& Bp, int m = 1) {
    auto p = common_zero(B, Bp);
    if (!p) throw DomainError("a point needs independent forms, got " + B.to_string() + " and " + Bp.to_string());
    if (m < 1) throw DomainError("multiplicity must be at least 1");
    for (auto& q : points_)
      if (q.point == *p) {
        q.multiplicity = std::max(q.multiplicity, m);
        return;
      }
    points_.push_back({B, Bp, m, *p});
  }

  void add(const P2Point<F>& p, int m = 1) {
    auto [B, Bp] = forms_through(p);
    add(B, Bp, m);
  }

  const std::vector<FatPoint<F>>& points() const { return points_; }

  std::vector<int> multiplicities() const {
    std::vector<int> out;
    for (const auto& q : points_) out.push_back(q.multiplicity);
    return out;
  }

  Ideal<F> ideal() const {
    std::vector<Ideal<F>> parts;
    for (const auto& q : points_)
      parts.push_back(
          ideal_power(Ideal<F>({q.B.polynomial(), q.Bp.polynomial()}, Grading::standard_p2), q.multiplicity));
    return intersect_all(parts, Grading::standard_p2);
  }

 private:
  std::vector<FatPoint<F>> points_;
};

/// Lines V(alpha_i, beta_i) of P^3 with alpha_i in s,t and beta_i in x,y, plus the
/// fat line V(x,y)^m (m = 0 for none).
template <Field F>
struct P3LineConfig {
  std::vector<std::pair<LinearForm<F>, LinearForm<F>>> lines;
  int m = 0;

  Ideal<F> ideal() const {
    std::vector<Ideal<F>> parts;
    for (const auto& [a, b] : lines)
      parts.push_back(Ideal<F>({a.polynomial(), b.polynomial()}, Grading::standard_p3));
    if (m > 0)
      parts.push_back(ideal_power(variables_ideal<F>(mask_of(Var::x) | mask_of(Var::y), Grading::standard_p3), m));
    return intersect_all(parts, Grading::standard_p3);
  }

  /// The beta pairwise distinct and the alpha not all equal.
  HypothesisReport hypotheses() const {
    HypothesisReport r;
    if (lines.size() < 2) r.violations.push_back({"1", "fewer than two lines"});
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        if (lines[i].second == lines[j].second)
          r.violations.push_back({"2", "lines " + std::to_string(i) + " and " + std::to_string(j) + " share beta"});
    if (lines.size() >= 2 &&
        std::all_of(lines.begin(), lines.end(), [&](const auto& l) { return l.first == lines[0].first; }))
      r.violations.push_back({"1", "all lines share alpha"});
    return r;
  }
};

/// The P^3 line configuration cut from a pencil configuration by L = 0.
template <Field F>
P3LineConfig<F> p3_config_from_section(const Configuration<F>& Z, const Polynomial<F>& L) {
  auto d = pencil_hypotheses(Z);
  if (!d.report.ok()) throw NotApplicable("pencil hypotheses fail: " + d.report.summary());
  if (evaluate_at(form01(L), *d.point).is_zero()) throw NonGenericError("section form vanishes at the pencil point");
  const auto sec = xyz_section(L);
  P3LineConfig<F> Y;
  Y.m = d.m;
  const VarMask xy = mask_of(Var::x) | mask_of(Var::y);
  for (const auto& h : Z.horizontals())
    Y.lines.push_back({h.A, LinearForm<F>::from_polynomial(sec.apply(h.B.polynomial()), xy)});
  return Y;
}

enum class ConfigMode { notation, pencil, arbitrary };

struct RandomConfigParams {
  ConfigMode mode = ConfigMode::notation;
  int max_horizontals = 4;
  int max_verticals = 3;
  int max_multiplicity = 3;
  int pencil_n = 2;  // pencil mode: number of horizontals
  int pencil_m = 1;  // pencil mode: multiplicity of the vertical, 0 for none
};

namespace detail {

// Forms in x,y,z with coefficients in {-1,0,1}, first nonzero coefficient 1.
template <Field F>
std::vector<LinearForm<F>> small_form_pool() {
  std::vector<LinearForm<F>> pool;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        if (a < 0 || (a == 0 && b < 0) || (a == 0 && b == 0 && c <= 0)) continue;
        auto p = Polynomial<F>::variable(Var::x).scaled(F::from_int(a)) +
                 Polynomial<F>::variable(Var::y).scaled(F::from_int(b)) +
                 Polynomial<F>::variable(Var::z).scaled(F::from_int(c));
        pool.push_back(form01(p));
      }
  return pool;
}

template <Field F>
std::vector<LinearForm<F>> a_pool() {
  using P = Polynomial<F>;
  return {form10(P::variable(Var::s)), form10(P::variable(Var::t)), form10(P::variable(Var::s) + P::variable(Var::t))};
}

inline int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

}  // namespace detail

/// Seeded random configuration. Notation mode draws forms from small pools so
/// that crossings coincide; pencil mode draws general forms in one pencil.
template <Field F>
Configuration<F> random_configuration(const RandomConfigParams& params, std::uint64_t seed) {
  Rng rng(seed);
  const auto pool = detail::small_form_pool<F>();
  const auto apool = detail::a_pool<F>();
  std::vector<HorizontalLine<F>> hs;
  std::vector<VerticalLine<F>> vs;

  if (params.mode == ConfigMode::pencil) {
    const int n = params.pencil_n;
    if (n < 2) throw DomainError("pencil configurations need at least two horizontals");
    if (params.pencil_m < 0) throw DomainError("pencil multiplicity must be nonnegative");
    LinearForm<F> B1, B2;
    do {
      B1 = form01(random_linear_form<F>(kMaskXYZ, rng));
      B2 = form01(random_linear_form<F>(kMaskXYZ, rng));
    } while (!common_zero(B1, B2));
    std::vector<LinearForm<F>> Bs{B1, B2};
    for (int attempts = 0; static_cast<int>(Bs.size()) < n; ++attempts) {
      if (attempts > 64 * n) throw DomainError("cannot draw " + std::to_string(n) + " distinct forms in one pencil");
      F l = F::random(rng), mu = F::random(rng);
      if (l.is_zero() && mu.is_zero()) continue;
      auto B = form01(B1.polynomial().scaled(l) + B2.polynomial().scaled(mu));
      if (std::none_of(Bs.begin(), Bs.end(), [&](const auto& o) { return o == B; })) Bs.push_back(B);
    }
    std::vector<LinearForm<F>> As;
    for (int i = 0; i < n; ++i) As.push_back(apool[rng() % apool.size()]);
    if (As[n - 2] == As[n - 1]) As[n - 1] = apool[(std::find(apool.begin(), apool.end(), As[n - 1]) - apool.begin() + 1) % apool.size()];
    for (int i = 0; i < n; ++i) hs.push_back({As[i], Bs[i], 1});
    if (params.pencil_m > 0) vs.emplace_back(B1, B2, params.pencil_m);
    return Configuration<F>::make(std::move(hs), std::move(vs));
  }

  if (params.max_horizontals < 1 || params.max_multiplicity < 1 || params.max_verticals < 0)
    throw DomainError("random configuration bounds must be positive");
  const bool notation = params.mode == ConfigMode::notation;
  if (notation && params.max_horizontals > static_cast<int>(pool.size()))
    throw DomainError("cannot draw " + std::to_string(params.max_horizontals) + " distinct forms from the pool");
  const int nh = detail::uniform(rng, 1, params.max_horizontals);
  while (static_cast<int>(hs.size()) < nh) {
    const auto& A = apool[rng() % apool.size()];
    const auto& B = pool[rng() % pool.size()];
    if (notation && std::any_of(hs.begin(), hs.end(), [&](const auto& h) { return h.B == B; })) continue;
    int m = notation ? 1 : detail::uniform(rng, 1, params.max_multiplicity);
    hs.push_back({A, B, m});
  }
  const int nv = detail::uniform(rng, 0, params.max_verticals);
  for (int k = 0; k < nv; ++k) {
    const int m = detail::uniform(rng, 1, params.max_multiplicity);
    if (hs.size() >= 2 && rng() % 3 != 0) {
      std::size_t i = rng() % hs.size(), j = rng() % hs.size();
      if (auto p = common_zero(hs[i].B, hs[j].B)) {
        vs.emplace_back(hs[i].B, hs[j].B, m);
        continue;
      }
    }
    while (true) {
      const auto& B = pool[rng() % pool.size()];
      const auto& Bp = pool[rng() % pool.size()];
      if (common_zero(B, Bp)) {
        vs.emplace_back(B, Bp, m);
        break;
      }
    }
  }
  return Configuration<F>::make(std::move(hs), std::move(vs));
}

}  // namespace lineacm
