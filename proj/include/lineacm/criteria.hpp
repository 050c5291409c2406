#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "config_file.hpp"
#include "configs.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "random.hpp"

namespace lineacm {

using Json = nlohmann::json;

inline constexpr int kDefaultRetries = 8;

/// A yes/no answer with the method that produced it and enough evidence to
/// replay it (the seed fixes every random choice).
struct AcmVerdict {
  bool verdict = false;
  std::string method;
  std::uint64_t seed = 0;
  int retries_used = 0;
  Json certificate = Json::object();

  Json to_json() const {
    return {{"verdict", verdict}, {"method", method}, {"seed", seed}, {"retries_used", retries_used},
            {"certificate", certificate}};
  }
};

enum class OracleDim { surface_in_p4, curve_in_p3 };

inline Json bidegrees_json(const std::vector<Bidegree>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(d.to_string());
  return out;
}

namespace detail {

/// A random linear form in `vars` that is a non-zerodivisor modulo I, i.e. I : L = I.
template <Field F>
std::pair<Polynomial<F>, int> draw_nonzerodivisor(const Ideal<F>& I, VarMask vars, Rng& rng, int max_retries) {
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    Polynomial<F> L = random_linear_form<F>(vars, rng);
    if (ideal_colon(I, L) == I) return {L, attempt};
  }
  throw NonGenericError("no non-zerodivisor linear form found in " + std::to_string(max_retries + 1) + " draws");
}

template <Field F>
Ideal<F> section_ideal(const Ideal<F>& I, const LinearSection<F>& sec, Grading target) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(sec.apply(g));
  return Ideal<F>(std::move(gens), target);
}

// Curve in P^3: ACM iff its section by a general plane is saturated in P^2.
template <Field F>
bool curve_stage(const Ideal<F>& I3, Rng& rng, int max_retries, Json& cert, int& retries) {
  if (krull_dimension(I3) != 2)
    throw ContractError("curve oracle needs a curve in P3; Krull dimension is " + std::to_string(krull_dimension(I3)));
  auto [L, r] = draw_nonzerodivisor(I3, kMaskSTXY, rng, max_retries);
  retries += r;
  static constexpr std::array<Var, 3> kTargets{Var::x, Var::y, Var::z};
  const auto sec = LinearSection<F>::make(L, kMaskSTXY, kTargets);
  Ideal<F> I2 = section_ideal(I3, sec, Grading::standard_p2);
  bool sat = is_saturated(I2, irrelevant_ideal<F>(Grading::standard_p2));
  cert["curve_section"] = {{"form", L.to_string()}, {"saturated", sat}};
  return sat;
}

}  // namespace detail

/// ACM test by general hyperplane sections. A surface in P^4 is ACM iff its
/// section I + (L1) is saturated and the resulting curve in P^3 is ACM; a curve
/// is ACM iff its section is saturated. Each general form is checked to be a
/// non-zerodivisor (I : L = I) and redrawn up to `max_retries` times.
template <Field F>
AcmVerdict acm_oracle(const Ideal<F>& I, OracleDim dim, std::uint64_t seed, int max_retries = kDefaultRetries) {
  Rng rng(seed);
  AcmVerdict v;
  v.method = "oracle";
  v.seed = seed;
  if (dim == OracleDim::curve_in_p3) {
    if (I.grading() != Grading::standard_p3) throw ContractError("curve oracle needs an ideal of k[s,t,x,y]");
    v.verdict = detail::curve_stage(I, rng, max_retries, v.certificate, v.retries_used);
    return v;
  }
  if (I.grading() != Grading::bigraded_p1xp2 && I.grading() != Grading::standard_p4)
    throw ContractError("surface oracle needs an ideal of k[s,t,x,y,z]");
  Ideal<F> I4 = I.with_grading(Grading::standard_p4);
  if (krull_dimension(I4) != 3)
    throw ContractError("surface oracle needs a surface in P4; Krull dimension is " + std::to_string(krull_dimension(I4)));
  auto [L, r] = detail::draw_nonzerodivisor(I4, kMaskSTXYZ, rng, max_retries);
  v.retries_used += r;
  static constexpr std::array<Var, 4> kTargets{Var::s, Var::t, Var::x, Var::y};
  const auto sec = LinearSection<F>::make(L, kMaskSTXYZ, kTargets);
  Ideal<F> I3 = detail::section_ideal(I4, sec, Grading::standard_p3);
  bool sat = is_saturated(I3, irrelevant_ideal<F>(Grading::standard_p3));
  v.certificate["surface_section"] = {{"form", L.to_string()}, {"saturated", sat}};
  v.verdict = sat && detail::curve_stage(I3, rng, max_retries, v.certificate, v.retries_used);
  return v;
}

/// Three h-vectors of the saturation criterion for Y and a form F of degree d:
/// Y1 cut by (I_Y + (F))^sat, Y2 by I_Y : F.
struct PropTable {
  HVector h_Y, h_Y1, h_Y2;
  int d = 0;
  bool equality = false;   // h_Y(τ) = h_Y1(τ) + h_Y2(τ - d) for all τ
  bool saturated = false;  // I_Y + (F) saturated, computed directly
  bool consistent() const { return equality == saturated; }

  std::size_t width() const {
    return std::max({h_Y.entries.size(), h_Y1.entries.size(), h_Y2.entries.size() + static_cast<std::size_t>(d)});
  }

  /// The three rows padded to a common width, the last one shifted by d.
  std::vector<std::vector<long>> rows() const {
    const std::size_t w = width();
    std::vector<std::vector<long>> out(3, std::vector<long>(w, 0));
    for (std::size_t t = 0; t < w; ++t) {
      out[0][t] = h_Y.at(static_cast<long>(t));
      out[1][t] = h_Y1.at(static_cast<long>(t));
      out[2][t] = h_Y2.at(static_cast<long>(t) - d);
    }
    return out;
  }

  Json to_json() const {
    return {{"h_Y", h_Y.entries}, {"h_Y1", h_Y1.entries}, {"h_Y2", h_Y2.entries}, {"d", d},
            {"rows", rows()},     {"equality", equality}, {"saturated", saturated}};
  }
};

/// Points of Y where F vanishes to order less than their multiplicity.
template <Field F>
std::vector<std::size_t> vanishing_order_violations(const FatPointsP2<F>& Y, const Polynomial<F>& Fm) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < Y.points().size(); ++i) {
    const auto& p = Y.points()[i];
    std::array<F, kNumVars> at{};
    at[2] = p.point.coords[0];
    at[3] = p.point.coords[1];
    at[4] = p.point.coords[2];
    if (!Fm.evaluate(at).is_zero()) continue;
    auto Ip = ideal_power(Ideal<F>({p.B.polynomial(), p.Bp.polynomial()}, Grading::standard_p2), p.multiplicity);
    if (!Ip.contains(Fm)) bad.push_back(i);
  }
  return bad;
}

/// Saturation criterion for I_Y + (F) through h-vectors. Requires F to vanish to
/// order at least m_i at every point P_i of Y it passes through.
template <Field F>
PropTable prop_saturation_test(const FatPointsP2<F>& Y, const Polynomial<F>& Fm) {
  if (Fm.is_zero()) throw DomainError("F must be nonzero");
  if ((Fm.support() & ~kMaskXYZ) != 0 || !Fm.is_homogeneous()) throw DomainError("F must be a form in x,y,z");
  if (Y.points().empty()) throw DomainError("Y must contain at least one point");
  auto bad = vanishing_order_violations(Y, Fm);
  if (!bad.empty())
    throw NotApplicable("F vanishes at point " + Y.points()[bad.front()].point.to_string() +
                        " to order below its multiplicity");
  const Ideal<F> IY = Y.ideal();
  const Ideal<F> m = irrelevant_ideal<F>(Grading::standard_p2);
  const Ideal<F> J = ideal_sum(IY, Fm);
  PropTable t;
  t.d = static_cast<int>(Fm.degree());
  t.h_Y = h_vector(IY);
  t.h_Y1 = h_vector(saturate(J, m));
  t.h_Y2 = h_vector(ideal_colon(IY, Fm));
  t.equality = true;
  for (std::size_t tau = 0; tau < t.width(); ++tau) {
    long k = static_cast<long>(tau);
    if (t.h_Y.at(k) != t.h_Y1.at(k) + t.h_Y2.at(k - t.d)) t.equality = false;
  }
  t.saturated = is_saturated(J, m);
  return t;
}

/// Minimal-generator bidegrees, sorted.
template <Field F>
std::vector<Bidegree> betti0_profile(const Ideal<F>& I) {
  std::vector<Bidegree> out;
  for (const auto& g : minimal_generators(I)) out.push_back(g.bidegree);
  std::sort(out.begin(), out.end());
  return out;
}

template <Field F>
void require_notation(const Configuration<F>& Z, const char* what) {
  auto r = validate_notation(Z);
  if (!r.ok())
    throw NotApplicable(std::string(what) + " needs reduced horizontals and equal B only with equal A: " + r.summary());
}

/// Necessary condition for ACM: no minimal generator of bidegree (a,b) with a > 1.
template <Field F>
bool acm_betti_necessary(const Configuration<F>& Z) {
  require_notation(Z, "betti condition");
  auto p = betti0_profile(ideal_of_configuration(Z));
  return std::none_of(p.begin(), p.end(), [](const Bidegree& d) { return d.a > 1; });
}

template <Field F>
FatPointsP2<F> vertical_points(const Configuration<F>& Z) {
  FatPointsP2<F> Y;
  for (const auto& v : Z.verticals()) Y.add(v.B(), v.Bp(), v.multiplicity());
  return Y;
}

/// All horizontals in one plane A = 0: Z is ACM iff I_{Z2} + (B_1...B_N) is
/// saturated in k[x,y,z]. No verticals means a complete intersection; an artinian
/// sum is not saturated.
template <Field F>
AcmVerdict one_plane_acm_test(const Configuration<F>& Z) {
  require_notation(Z, "one-plane test");
  const auto& hs = Z.horizontals();
  if (!std::all_of(hs.begin(), hs.end(), [&](const auto& h) { return h.A == hs[0].A; }))
    throw NotApplicable("one-plane test needs every horizontal line in one plane A = 0");
  AcmVerdict v;
  v.method = "one-plane";
  Polynomial<F> Fm = Polynomial<F>::constant(F::from_int(1));
  for (const auto& h : hs) Fm = Fm * h.B.polynomial();
  v.certificate["F"] = Fm.to_string();
  v.certificate["A"] = hs[0].A.to_string();
  if (Z.verticals().empty()) {
    v.verdict = true;
    v.certificate["complete_intersection"] = true;
    return v;
  }
  const auto Y = vertical_points(Z);
  const Ideal<F> J = ideal_sum(Y.ideal(), Fm);
  if (krull_dimension(J) <= 0) {
    v.verdict = false;
    v.certificate["artinian"] = true;
    return v;
  }
  v.verdict = is_saturated(J, irrelevant_ideal<F>(Grading::standard_p2));
  v.certificate["artinian"] = false;
  if (vanishing_order_violations(Y, Fm).empty()) {
    auto table = prop_saturation_test(Y, Fm);
    v.certificate["h_vector_table"] = table.to_json();
    if (table.equality != v.verdict) throw InconsistencyError("h-vector table disagrees with the saturation test");
  }
  return v;
}

/// Pencil criterion: ACM iff m >= n - 1.
template <Field F>
AcmVerdict pencil_acm_test(const Configuration<F>& Z) {
  auto d = pencil_hypotheses(Z);
  if (!d.report.ok()) throw NotApplicable("pencil hypotheses fail: " + d.report.summary());
  AcmVerdict v;
  v.method = "pencil";
  v.verdict = d.m >= d.n - 1;
  v.certificate = {{"n", d.n}, {"m", d.m}, {"point", d.point->to_string()}};
  return v;
}

template <Field F>
AcmVerdict p3_pencil_acm_test(const P3LineConfig<F>& Y) {
  auto r = Y.hypotheses();
  if (!r.ok()) throw NotApplicable("line configuration hypotheses fail: " + r.summary());
  AcmVerdict v;
  v.method = "p3-pencil";
  const int n = static_cast<int>(Y.lines.size());
  v.verdict = Y.m >= n - 1;
  v.certificate = {{"n", n}, {"m", Y.m}};
  return v;
}

struct FatteningResult {
  std::optional<int> multiplicity;  // empty: not found up to the cap
  std::string method;
  int cap = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<int, bool>> trials;  // (m, oracle verdict)

  Json to_json() const {
    Json t = Json::array();
    for (const auto& [m, ok] : trials) t.push_back({{"m", m}, {"acm", ok}});
    return {{"multiplicity", multiplicity ? Json(*multiplicity) : Json(nullptr)},
            {"found", multiplicity.has_value()},
            {"method", method},
            {"cap", cap},
            {"seed", seed},
            {"trials", t}};
  }
};

/// Least multiplicity of vertical `index` making Z ACM: n - 1 when the pencil
/// hypotheses hold, otherwise a search m = 1..cap with the oracle.
template <Field F>
FatteningResult min_fattening(const Configuration<F>& Z, std::size_t index, std::uint64_t seed, int cap = 8) {
  if (index >= Z.verticals().size()) throw DomainError("no vertical line with index " + std::to_string(index));
  if (cap < 1) throw DomainError("cap must be at least 1");
  FatteningResult r;
  r.cap = cap;
  r.seed = seed;
  auto d = pencil_hypotheses(Z.with_vertical_multiplicity(index, 1));
  if (d.report.ok()) {
    r.method = "pencil";
    r.multiplicity = std::max(1, d.n - 1);
    return r;
  }
  r.method = "oracle";
  Rng rng(seed);
  for (int m = 1; m <= cap; ++m) {
    auto v = acm_oracle(ideal_of_configuration(Z.with_vertical_multiplicity(index, m)), OracleDim::surface_in_p4,
                        derive_seed(rng));
    r.trials.push_back({m, v.verdict});
    if (v.verdict) {
      r.multiplicity = m;
      break;
    }
  }
  return r;
}

/// Locally Cohen-Macaulay by the combinatorial criterion.
template <Field F>
bool local_cm_test(const Configuration<F>& Z) {
  require_notation(Z, "local CM test");
  return is_fully_v_connected(Z).holds;
}

template <Field F>
struct LocalCmPoint {
  P2Point<F> point;
  int n = 0;
  int m = 0;
  bool oracle = false;
  bool combinatorial = false;
  std::string section_form;
  int retries = 0;
};

template <Field F>
struct LocalCmReport {
  bool oracle = true;
  bool combinatorial = true;
  std::uint64_t seed = 0;
  std::vector<LocalCmPoint<F>> points;

  bool agree() const { return oracle == combinatorial; }

  Json to_json() const {
    Json pts = Json::array();
    for (const auto& p : points)
      pts.push_back({{"point", p.point.to_string()},
                     {"n", p.n},
                     {"m", p.m},
                     {"oracle", p.oracle},
                     {"combinatorial", p.combinatorial},
                     {"section_form", p.section_form},
                     {"retries", p.retries}});
    return {{"oracle", oracle}, {"combinatorial", combinatorial}, {"agree", agree()}, {"seed", seed}, {"points", pts}};
  }
};

/// Local CM check by algebra. At each crossing point p the components through
/// the P^4 point over p form a cone W; W is CM at its vertex iff its section by a
/// general plane L in x,y,z (L(p) != 0) is an ACM curve. Vertical lines away from
/// crossings are cones over fat points and always CM.
template <Field F>
LocalCmReport<F> local_cm_oracle(const Configuration<F>& Z, std::uint64_t seed, int max_retries = kDefaultRetries) {
  require_notation(Z, "local CM oracle");
  LocalCmReport<F> r;
  r.seed = seed;
  r.combinatorial = is_fully_v_connected(Z).holds;
  Rng rng(seed);
  for (const auto& c : crossings(Z)) {
    std::vector<HorizontalLine<F>> hs;
    for (auto i : c.horizontals) hs.push_back(Z.horizontals()[i]);
    std::vector<VerticalLine<F>> vs;
    if (c.vertical) vs.push_back(Z.verticals()[*c.vertical]);
    auto W = Configuration<F>::make(std::move(hs), std::move(vs));
    LocalCmPoint<F> pt;
    pt.point = c.point;
    pt.n = static_cast<int>(c.horizontals.size());
    pt.m = c.vertical ? Z.verticals()[*c.vertical].multiplicity() : 0;
    pt.combinatorial = pt.m >= pt.n - 1;
    Polynomial<F> L;
    for (int attempt = 0;; ++attempt) {
      if (attempt > max_retries) throw NonGenericError("no section plane avoiding " + c.point.to_string());
      L = random_linear_form<F>(kMaskXYZ, rng);
      if (!evaluate_at(form01(L), c.point).is_zero()) break;
      ++pt.retries;
    }
    pt.section_form = L.to_string();
    auto curve = hyperplane_section_to_P3(W, L);
    auto v = acm_oracle(curve, OracleDim::curve_in_p3, derive_seed(rng), max_retries);
    pt.retries += v.retries_used;
    pt.oracle = v.verdict;
    r.oracle = r.oracle && pt.oracle;
    r.points.push_back(std::move(pt));
  }
  return r;
}

struct HatReport {
  AcmVerdict z;
  AcmVerdict hat;
  std::vector<Bidegree> betti_z;
  std::vector<Bidegree> betti_hat;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  Json to_json() const {
    return {{"z", z.to_json()},
            {"hat", hat.to_json()},
            {"betti_z", bidegrees_json(betti_z)},
            {"betti_hat", bidegrees_json(betti_hat)},
            {"violations", violations}};
  }
};

/// If Z is ACM then its hat is ACM with the same minimal-generator bidegrees.
/// Violations are reported, not thrown.
template <Field F>
HatReport hat_necessary_check(const Configuration<F>& Z, std::uint64_t seed) {
  require_notation(Z, "hat check");
  Rng rng(seed);
  HatReport r;
  const auto IZ = ideal_of_configuration(Z);
  const auto IH = ideal_of_configuration(hat_of(Z));
  r.z = acm_oracle(IZ, OracleDim::surface_in_p4, derive_seed(rng));
  r.hat = acm_oracle(IH, OracleDim::surface_in_p4, derive_seed(rng));
  r.betti_z = betti0_profile(IZ);
  r.betti_hat = betti0_profile(IH);
  if (r.z.verdict && !r.hat.verdict) r.violations.push_back("Z is ACM but its hat is not");
  if (r.z.verdict && r.hat.verdict && r.betti_z != r.betti_hat)
    r.violations.push_back("Z and its hat have different minimal-generator bidegrees");
  return r;
}

enum class Question { hatz_betti, fully_v_plus_hat };

inline std::string to_string(Question q) { return q == Question::hatz_betti ? "hatz-betti" : "fully-v-plus-hat"; }

struct ExploreInstance {
  int trial = 0;  // -1 for the built-in fixture
  std::uint64_t seed = 0;
  std::string config;
  std::string note;

  Json to_json() const { return {{"trial", trial}, {"seed", seed}, {"config", config}, {"note", note}}; }
};

struct ExploreSummary {
  std::string question;
  int trials = 0;
  std::uint64_t seed = 0;
  int considered = 0;
  std::vector<ExploreInstance> supporting;
  std::vector<ExploreInstance> contradicting;
  std::vector<ExploreInstance> excluded;

  Json to_json() const {
    auto list = [](const std::vector<ExploreInstance>& v) {
      Json a = Json::array();
      for (const auto& i : v) a.push_back(i.to_json());
      return a;
    };
    return {{"label", "experimental evidence"},
            {"question", question},
            {"trials", trials},
            {"seed", seed},
            {"considered", considered},
            {"supporting", list(supporting)},
            {"contradicting", list(contradicting)},
            {"excluded", list(excluded)}};
  }
};

/// Samples configurations satisfying validate_notation, keeps those meeting the
/// question's hypotheses and records whether each is ACM. Evidence only.
///   hatz-betti:        hat ACM and no minimal generator with a > 1
///   fully-v-plus-hat:  fully v-connected and hat ACM
template <Field F>
ExploreSummary explore_open_question(Question q, int trials, std::uint64_t seed,
                                     RandomConfigParams params = RandomConfigParams{}) {
  ExploreSummary s;
  s.question = to_string(q);
  s.trials = trials;
  s.seed = seed;
  if (trials <= 0) return s;
  params.mode = ConfigMode::notation;

  auto examine = [&](const Configuration<F>& Z, int trial, std::uint64_t tseed) {
    Rng rng(tseed);
    const auto IZ = ideal_of_configuration(Z);
    const auto H = hat_of(Z);
    std::string reason;
    if (q == Question::fully_v_plus_hat && !is_fully_v_connected(Z).holds) reason = "not fully v-connected";
    if (reason.empty() && q == Question::hatz_betti) {
      auto p = betti0_profile(IZ);
      if (std::any_of(p.begin(), p.end(), [](const Bidegree& d) { return d.a > 1; }))
        reason = "minimal generator with a > 1";
    }
    if (reason.empty() && !acm_oracle(ideal_of_configuration(H), OracleDim::surface_in_p4, derive_seed(rng)).verdict)
      reason = "hat not ACM";
    ExploreInstance inst{trial, tseed, format_configuration(Z), reason};
    if (!reason.empty()) {
      s.excluded.push_back(std::move(inst));
      return;
    }
    ++s.considered;
    if (acm_oracle(IZ, OracleDim::surface_in_p4, derive_seed(rng)).verdict)
      s.supporting.push_back(std::move(inst));
    else
      s.contradicting.push_back(std::move(inst));
  };

  if (q == Question::fully_v_plus_hat) {
    // Fully v-connected yet not ACM: the filter must exclude it.
    using P = Polynomial<F>;
    auto Z0 = Configuration<F>::make(
        {{form10(P::variable(Var::s)), form01(P::variable(Var::x)), 1}},
        {VerticalLine<F>(form01(P::variable(Var::y)), form01(P::variable(Var::z)), 1)});
    examine(Z0, -1, seed);
  }
  Rng master(seed);
  for (int t = 0; t < trials; ++t) {
    std::uint64_t tseed = derive_seed(master);
    examine(random_configuration<F>(params, tseed), t, tseed);
  }
  return s;
}

}  // namespace lineacm
