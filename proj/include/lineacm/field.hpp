#pragma once

#include <charconv>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace lineacm {

using Rng = std::mt19937_64;

/// Exact coefficient field. Elements are regular values; all arithmetic is exact.
template <class F>
concept Field = std::regular<F> && requires(F a, F b, std::int64_t n, std::string_view text, Rng& rng) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
  { F::from_int(n) } -> std::same_as<F>;
  { F::parse(text) } -> std::same_as<F>;
  { F::random(rng) } -> std::same_as<F>;
  { F::name() } -> std::same_as<std::string>;
};

/// Integers modulo a word-sized prime P.
///
/// Printed in the symmetric range (-P/2, P/2] so small negative coefficients read
/// naturally (`s^2 - t^2` rather than `s^2 + 32002*t^2`).
template <std::uint32_t P>
class Zp {
  static_assert(P > 2 && P < (1u << 31), "modulus must fit comfortably in 31 bits");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;

  static constexpr Zp from_int(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    if (r < 0) r += P;
    return raw(static_cast<std::uint32_t>(r));
  }

  static constexpr Zp raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  /// Symmetric representative in (-P/2, P/2].
  constexpr std::int64_t signed_value() const {
    return v_ > P / 2 ? static_cast<std::int64_t>(v_) - P : static_cast<std::int64_t>(v_);
  }

  constexpr Zp& operator+=(Zp o) {
    std::uint32_t s = v_ + o.v_;
    v_ = s >= P ? s - P : s;
    return *this;
  }
  constexpr Zp& operator-=(Zp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_;
    return *this;
  }
  constexpr Zp& operator*=(Zp o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
    return *this;
  }
  constexpr Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
  friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
  friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
  friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
  constexpr Zp operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  friend constexpr bool operator==(Zp, Zp) = default;

  constexpr Zp inverse() const {
    if (v_ == 0) throw DomainError("division by zero in Z/" + std::to_string(P));
    std::int64_t a = v_, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return from_int(x0);
  }

  std::string to_string() const { return std::to_string(signed_value()); }

  /// Accepts an optionally signed integer or a fraction `a/b`.
  static Zp parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) return parse(text.substr(0, slash)) / parse(text.substr(slash + 1));
    bool neg = !text.empty() && text.front() == '-';
    if (neg) text.remove_prefix(1);
    if (text.empty()) throw ParseError("empty coefficient");
    Zp acc;
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError("bad digit in coefficient: '" + std::string(1, c) + "'");
      acc = acc * from_int(10) + from_int(c - '0');
    }
    return neg ? -acc : acc;
  }

  /// Uniform over the whole field.
  static Zp random(Rng& rng) { return raw(static_cast<std::uint32_t>(rng() % P)); }

  static std::string name() { return std::to_string(P); }

 private:
  std::uint32_t v_ = 0;
};

/// Arbitrary-precision rationals (GMP).
class Rational {
 public:
  /// Random draws are integers in [-kRandomBound, kRandomBound]; the field is
  /// infinite so uniform sampling is replaced by a bounded box.
  static constexpr std::int64_t kRandomBound = 7;

  Rational() = default;
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_int(std::int64_t n) { return Rational(mpq_class(static_cast<long>(n))); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  Rational inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q");
    return Rational(mpq_class(1 / v_));
  }

  std::string to_string() const { return v_.get_str(); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty coefficient");
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
      if (!ok) throw ParseError("bad character in coefficient: '" + std::string(1, c) + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational coefficient '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(std::move(q));
  }

  static Rational random(Rng& rng) {
    auto span = static_cast<std::uint64_t>(2 * kRandomBound + 1);
    return from_int(static_cast<std::int64_t>(rng() % span) - kRandomBound);
  }

  static std::string name() { return "Q"; }

 private:
  mpq_class v_;
};

using DefaultField = Zp<32003>;

static_assert(Field<DefaultField>);
static_assert(Field<Rational>);

}  // namespace lineacm
