#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace lineacm {

/// Parses `coeff*monomial` terms joined by `+`/`-`, e.g. `s^2*t*x - 3/2*s*t^2*x`.
/// Factors must be joined by `*` (no juxtaposition); exponents use `^`. Only the
/// variables in `allowed` may appear. `column_offset` shifts reported columns when
/// the text is a slice of a larger line.
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, VarMask allowed = kMaskSTXYZ, int line = 0,
                               int column_offset = 0) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(msg, line, column_offset + static_cast<int>(pos) + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string_view {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  std::vector<Term<F>> terms;
  skip_ws();
  if (pos == text.size()) throw fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    first = false;

    F coeff = F::from_int(1);
    std::array<unsigned, kNumVars> exps{};
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos == text.size()) throw fail("expected a coefficient or variable");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        read_digits();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          if (read_digits().empty()) throw fail("expected denominator after '/'");
        }
        std::string_view num = text.substr(start, pos - start);
        try {
          coeff *= F::parse(num);
        } catch (const DomainError&) {
          throw fail("zero denominator in coefficient");
        } catch (const ParseError& e) {
          throw fail(e.what());
        }
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t idx = kNumVars;
        for (std::size_t i = 0; i < kNumVars; ++i)
          if (kVarNames[i] == c) idx = i;
        if (idx == kNumVars || !(allowed & (1u << idx))) throw fail(std::string("unknown variable '") + c + "'");
        ++pos;
        if (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
          throw fail("juxtaposed factors; join factors with '*'");
        unsigned e = 1;
        std::size_t save = pos;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          std::string_view digits = read_digits();
          if (digits.empty()) throw fail("expected exponent after '^'");
          e = static_cast<unsigned>(std::stoul(std::string(digits)));
          if (e > Monomial::kMaxDegree) throw fail("exponent too large");
        } else {
          pos = save;
        }
        exps[idx] += e;
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        need_factor = false;
      }
    }
    if (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
      throw fail("juxtaposed factors; join factors with '*'");
    try {
      terms.push_back({Monomial::from_exponents(exps), negative ? -coeff : coeff});
    } catch (const DomainError& e) {
      throw fail(e.what());
    }
    skip_ws();
    if (pos == text.size()) break;
  }
  return Polynomial<F>::from_terms(std::move(terms));
}

}  // namespace lineacm
