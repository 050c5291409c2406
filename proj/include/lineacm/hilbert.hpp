#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"

namespace lineacm {

/// First differences of the Hilbert function of a zero-dimensional scheme, up to
/// the last nonzero entry. Empty for the empty scheme.
struct HVector {
  std::vector<long> entries;

  long degree() const { return std::accumulate(entries.begin(), entries.end(), 0L); }
  bool empty() const { return entries.empty(); }

  /// Entry at index i, zero outside the stored range (negative i included).
  long at(long i) const {
    return i < 0 || i >= static_cast<long>(entries.size()) ? 0 : entries[static_cast<std::size_t>(i)];
  }

  /// `1 2 2`
  std::string row() const {
    std::string out;
    for (std::size_t k = 0; k < entries.size(); ++k) out += (k ? " " : "") + std::to_string(entries[k]);
    return out;
  }

  friend bool operator==(const HVector&, const HVector&) = default;
};

namespace detail {

// Monomials of degree `remaining` in the variables vars[from..] not divisible by
// any leading monomial.
inline long count_standard(const std::vector<std::size_t>& vars, std::size_t from, unsigned remaining,
                           std::array<unsigned, kNumVars>& exps, const std::vector<Monomial>& lms) {
  if (from + 1 == vars.size()) {
    exps[vars[from]] = remaining;
    Monomial m = Monomial::from_exponents(exps);
    exps[vars[from]] = 0;
    for (Monomial lm : lms)
      if (lm.divides(m)) return 0;
    return 1;
  }
  long total = 0;
  for (unsigned e = 0; e <= remaining; ++e) {
    exps[vars[from]] = e;
    total += count_standard(vars, from + 1, remaining - e, exps, lms);
  }
  exps[vars[from]] = 0;
  return total;
}

}  // namespace detail

/// H(0..tau_max) of R/I in the standard grading of the ambient ring: the number
/// of standard monomials (outside the leading-term ideal) in each degree.
template <Field F>
std::vector<long> hilbert_function(const Ideal<F>& I, int tau_max) {
  const auto lms = I.groebner().leading_monomials();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (I.ambient() & (1u << i)) vars.push_back(i);
  std::vector<long> H;
  std::array<unsigned, kNumVars> exps{};
  for (int d = 0; d <= tau_max; ++d) H.push_back(detail::count_standard(vars, 0, static_cast<unsigned>(d), exps, lms));
  return H;
}

/// h-vector of the zero-dimensional scheme cut out by I. The Hilbert function is
/// evaluated up to (sum of generator degrees) + 5 and must be flat at the end.
template <Field F>
HVector h_vector(const Ideal<F>& I) {
  if (I.is_unit()) return {};
  if (krull_dimension(I) != 1)
    throw DomainError("h_vector needs a zero-dimensional projective scheme; Krull dimension is " +
                      std::to_string(krull_dimension(I)));
  int cap = 5;
  for (const auto& g : I.generators()) cap += static_cast<int>(g.degree());
  std::vector<long> H = hilbert_function(I, cap);
  std::vector<long> delta(H.size());
  for (std::size_t i = 0; i < H.size(); ++i) delta[i] = H[i] - (i ? H[i - 1] : 0);
  if (delta[delta.size() - 1] != 0 || delta[delta.size() - 2] != 0)
    throw CapExceeded("Hilbert function has not stabilized by degree " + std::to_string(cap));
  std::size_t last = delta.size();
  while (last > 0 && delta[last - 1] == 0) --last;
  return HVector{std::vector<long>(delta.begin(), delta.begin() + static_cast<long>(last))};
}

/// sum_i binom(m_i + N - 1, N): degree of fat points of multiplicities m_i in P^N.
inline long degree_of_fat_points(std::span<const int> multiplicities, int ambient_dim) {
  long total = 0;
  for (int m : multiplicities) {
    if (m < 1) throw DomainError("fat point multiplicity must be at least 1");
    long b = 1;  // binom(m + N - 1, N) built incrementally
    for (int k = 1; k <= ambient_dim; ++k) b = b * (m - 1 + k) / k;
    total += b;
  }
  return total;
}

}  // namespace lineacm
