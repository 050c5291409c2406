#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace lineacm;
using namespace lineacm::testing;

namespace {

template <Field F>
Polynomial<F> random_homogeneous(VarMask vars, unsigned d, int terms, Rng& rng) {
  auto monos = monomials_of_degree(vars, d);
  std::vector<Term<F>> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({monos[rng() % monos.size()], F::random(rng)});
  return Polynomial<F>::from_terms(ts);
}

template <Field F>
long standard_monomials(const GroebnerBasis<F>& gb, VarMask vars, unsigned d) {
  auto lms = gb.leading_monomials();
  long n = 0;
  for (Monomial m : monomials_of_degree(vars, d))
    n += std::none_of(lms.begin(), lms.end(), [&](Monomial l) { return l.divides(m); });
  return n;
}

template <Field F>
void check_reduced(const GroebnerBasis<F>& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(g[i].leading_coefficient() == F::from_int(1));
    if (i) REQUIRE(gb.order().less(g[i].leading_monomial(), g[i - 1].leading_monomial()));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[j].terms()) REQUIRE_FALSE(g[i].leading_monomial().divides(t.mono));
    }
  }
}

}  // namespace

TEST_CASE("known small bases", "[groebner]") {
  using F = Zp<32003>;
  auto gb = buchberger(polys<F>({"x^2 - y*z", "x*y - z^2"}));
  // the twisted-cubic-like ideal closes up with one more cubic
  REQUIRE(gb.size() == 3);
  check_reduced(gb);
  REQUIRE(normal_form(poly<F>("y^2*z - x*z^2"), gb).is_zero());

  REQUIRE(buchberger(polys<F>({"x", "y", "x + y + 1"})).is_unit_ideal());
  REQUIRE(buchberger(std::vector<Polynomial<F>>{}).is_zero_ideal());
  auto same = buchberger(polys<F>({"x*y - z^2", "x^2 - y*z", "x^2 - y*z + x*y - z^2"}));
  REQUIRE(same == gb);
}

TEMPLATE_TEST_CASE("random ideals: membership, Hilbert function and normal forms", "[groebner]", Zp<32003>,
                   Rational) {
  using F = TestType;
  using P = Polynomial<F>;
  const VarMask vars = kMaskSTXY;
  Rng rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<P> gens;
    const int ngens = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < ngens; ++k) gens.push_back(random_homogeneous<F>(vars, 2 + rng() % 2, 4, rng));
    auto gb = buchberger(gens);
    check_reduced(gb);
    for (const auto& g : gb.generators()) REQUIRE(naive_contains(gens, vars, g));
    for (const auto& g : gens) REQUIRE(normal_form(g, gb).is_zero());
    for (unsigned d = 0; d <= 5; ++d) REQUIRE(standard_monomials(gb, vars, d) == naive_hilbert(gens, vars, d));
    for (int k = 0; k < 10; ++k) {
      P f = random_homogeneous<F>(vars, 4, 5, rng);
      P r = normal_form(f, gb);
      REQUIRE(naive_contains(gens, vars, f - r));
      for (const auto& t : r.terms())
        for (Monomial l : gb.leading_monomials()) REQUIRE_FALSE(l.divides(t.mono));
      REQUIRE(r.is_zero() == naive_contains(gens, vars, f));
    }
  }
}

TEST_CASE("elimination order projects away the auxiliary variable", "[groebner]") {
  using F = Zp<32003>;
  auto order = MonomialOrder::elimination(kMaskAux);
  std::vector<Polynomial<F>> gens;
  for (auto& g : polys<F>({"x - w", "y*z - w^2"})) gens.push_back(g.with_order(order));
  auto gb = buchberger(gens, order);
  auto kept = eliminate(gb, kMaskAux);
  REQUIRE(kept.size() == 1);
  REQUIRE(kept[0].with_order(MonomialOrder::degrevlex()).monic() == poly<F>("x^2 - y*z"));
  REQUIRE_THROWS_AS(eliminate(buchberger(polys<F>({"x"})), kMaskAux), ContractError);
}

TEST_CASE("basis does not depend on generator order", "[groebner]") {
  using F = Zp<32003>;
  auto a = polys<F>({"s*x - t*y", "x^2 - z^2", "s^2 - t*s"});
  auto b = a;
  std::reverse(b.begin(), b.end());
  REQUIRE(buchberger(a) == buchberger(b));
}
