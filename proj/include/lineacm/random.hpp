#pragma once

#include <cstdint>

#include "field.hpp"
#include "polynomial.hpp"

namespace lineacm {

enum class LinearFormKind {
  bidegree_10,     // a*s + b*t
  bidegree_01,     // a*x + b*y + c*z
  total_degree_1,  // any linear form in s,t,x,y,z
};

constexpr VarMask variables_of(LinearFormKind kind) {
  switch (kind) {
    case LinearFormKind::bidegree_10:
      return kMaskST;
    case LinearFormKind::bidegree_01:
      return kMaskXYZ;
    case LinearFormKind::total_degree_1:
      return kMaskSTXYZ;
  }
  return 0;
}

/// Nonzero linear form in `vars` with coefficients drawn from the field; a zero
/// draw is redrawn. Deterministic for a given generator state.
template <Field F>
Polynomial<F> random_linear_form(VarMask vars, Rng& rng) {
  if (vars == 0) throw DomainError("random_linear_form: empty variable set");
  while (true) {
    std::vector<Term<F>> terms;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (vars & (1u << i)) terms.push_back({Monomial::var(static_cast<Var>(i)), F::random(rng)});
    auto p = Polynomial<F>::from_terms(std::move(terms));
    if (!p.is_zero()) return p;
  }
}

template <Field F>
Polynomial<F> random_linear_form(LinearFormKind kind, Rng& rng) {
  return random_linear_form<F>(variables_of(kind), rng);
}

/// Independent child seed, so sub-computations stay reproducible on their own.
inline std::uint64_t derive_seed(Rng& rng) { return rng(); }

}  // namespace lineacm
