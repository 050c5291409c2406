#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace lineacm {

/// Variables of k[s,t,x,y,z] plus the internal auxiliary variable w used by
/// intersections. Index order is the default variable order s > t > x > y > z > w.
enum class Var : std::uint8_t { s = 0, t = 1, x = 2, y = 3, z = 4, w = 5 };

inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<char, kNumVars> kVarNames{'s', 't', 'x', 'y', 'z', 'w'};

/// Bit i set means variable i is present.
using VarMask = std::uint8_t;

constexpr VarMask mask_of(Var v) { return static_cast<VarMask>(1u << static_cast<unsigned>(v)); }
inline constexpr VarMask kMaskST = mask_of(Var::s) | mask_of(Var::t);
inline constexpr VarMask kMaskXYZ = mask_of(Var::x) | mask_of(Var::y) | mask_of(Var::z);
inline constexpr VarMask kMaskSTXYZ = kMaskST | kMaskXYZ;
inline constexpr VarMask kMaskSTXY = kMaskST | mask_of(Var::x) | mask_of(Var::y);
inline constexpr VarMask kMaskAux = mask_of(Var::w);

struct Bidegree {
  int a = 0;  // degree in s,t
  int b = 0;  // degree in x,y,z

  friend constexpr Bidegree operator+(Bidegree l, Bidegree r) { return {l.a + r.a, l.b + r.b}; }
  friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;

  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Exponent vector packed one byte per variable; the top byte caches the total
/// degree. Total degree is kept below 128 so SWAR divisibility stays exact.
class Monomial {
 public:
  static constexpr unsigned kMaxDegree = 127;

  constexpr Monomial() = default;

  static constexpr Monomial var(Var v, unsigned e = 1) {
    std::array<unsigned, kNumVars> exps{};
    exps[static_cast<unsigned>(v)] = e;
    return from_exponents(exps);
  }

  static constexpr Monomial from_exponents(const std::array<unsigned, kNumVars>& exps) {
    std::uint64_t bits = 0;
    unsigned deg = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      deg += exps[i];
      if (deg > kMaxDegree) throw DomainError("monomial degree exceeds " + std::to_string(kMaxDegree));
      bits |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    }
    return Monomial(bits | (static_cast<std::uint64_t>(deg) << 56));
  }

  constexpr unsigned exponent(std::size_t i) const { return static_cast<unsigned>((bits_ >> (8 * i)) & 0xff); }
  constexpr unsigned exponent(Var v) const { return exponent(static_cast<std::size_t>(v)); }
  constexpr unsigned degree() const { return static_cast<unsigned>(bits_ >> 56); }

  constexpr unsigned degree_in(VarMask mask) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (mask & (1u << i)) d += exponent(i);
    return d;
  }

  constexpr Bidegree bidegree() const {
    return {static_cast<int>(degree_in(kMaskST)), static_cast<int>(degree_in(kMaskXYZ))};
  }

  constexpr VarMask support() const {
    VarMask m = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (exponent(i) != 0) m |= static_cast<VarMask>(1u << i);
    return m;
  }

  constexpr bool is_one() const { return bits_ == 0; }

  /// True iff this monomial divides `other`.
  constexpr bool divides(Monomial other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
  }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    if (a.degree() + b.degree() > kMaxDegree)
      throw DomainError("monomial degree exceeds " + std::to_string(kMaxDegree));
    return Monomial(a.bits_ + b.bits_);
  }

  /// Exact quotient; requires b | a.
  friend constexpr Monomial operator/(Monomial a, Monomial b) { return Monomial(a.bits_ - b.bits_); }

  friend constexpr Monomial lcm(Monomial a, Monomial b) {
    std::array<unsigned, kNumVars> e{};
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = a.exponent(i) > b.exponent(i) ? a.exponent(i) : b.exponent(i);
    return from_exponents(e);
  }

  friend constexpr Monomial gcd(Monomial a, Monomial b) {
    std::array<unsigned, kNumVars> e{};
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = a.exponent(i) < b.exponent(i) ? a.exponent(i) : b.exponent(i);
    return from_exponents(e);
  }

  friend constexpr bool coprime(Monomial a, Monomial b) { return (a.support() & b.support()) == 0; }

  friend constexpr bool operator==(Monomial, Monomial) = default;

  constexpr std::uint64_t bits() const { return bits_; }

  /// `s^2*t*x`; the unit monomial prints as "1".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = exponent(i);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += kVarNames[i];
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

 private:
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

/// Degree-reverse-lexicographic order (s > t > x > y > z > w), or a block order
/// that first compares the `front` variables (degrevlex within the block) and
/// breaks ties by degrevlex on the remaining variables. The block order
/// eliminates `front`.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { degrevlex, block_elimination };

  static constexpr MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static constexpr MonomialOrder elimination(VarMask front) { return MonomialOrder(Kind::block_elimination, front); }

  constexpr Kind kind() const { return kind_; }
  constexpr VarMask front() const { return front_; }

  /// True iff every variable in `vars` sits in the eliminated front block.
  constexpr bool eliminates(VarMask vars) const {
    return vars == 0 || (kind_ == Kind::block_elimination && (vars & ~front_) == 0);
  }

  /// Negative, zero or positive as a is smaller than, equal to or larger than b.
  constexpr int compare(Monomial a, Monomial b) const {
    if (a == b) return 0;
    if (kind_ == Kind::degrevlex) return revlex_in(a, b, kAllVars);
    int c = revlex_in(a, b, front_);
    if (c != 0) return c;
    return revlex_in(a, b, static_cast<VarMask>(kAllVars & ~front_));
  }

  constexpr bool less(Monomial a, Monomial b) const { return compare(a, b) < 0; }

  friend constexpr bool operator==(MonomialOrder, MonomialOrder) = default;

  std::string to_string() const {
    if (kind_ == Kind::degrevlex) return "degrevlex";
    std::string vars;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (front_ & (1u << i)) vars += kVarNames[i];
    return "elim(" + vars + ")";
  }

 private:
  static constexpr VarMask kAllVars = (1u << kNumVars) - 1;

  constexpr MonomialOrder(Kind kind, VarMask front) : kind_(kind), front_(front) {}

  static constexpr int revlex_in(Monomial a, Monomial b, VarMask mask) {
    unsigned da = mask == kAllVars ? a.degree() : a.degree_in(mask);
    unsigned db = mask == kAllVars ? b.degree() : b.degree_in(mask);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = kNumVars; i-- > 0;) {
      if (!(mask & (1u << i))) continue;
      // Reverse lex: a larger exponent in the last differing variable means smaller.
      unsigned ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  VarMask front_;
};

}  // namespace lineacm
