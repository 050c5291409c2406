#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "configs.hpp"
#include "errors.hpp"
#include "poly_io.hpp"

namespace lineacm {

// Line-oriented configuration language:
//
//   # comment
//   field 32003            optional, before the ambient tag (or: field Q)
//   P1xP2                  ambient tag: P1xP2 | P2 | P3
//   H: s ; x               horizontal line V(A,B); H^m for a fat one
//   V^2: x ; y             vertical line V(B,B')^m
//   PT^3: x ; y            fat point of P2
//   F: x^2*y - x*y^2       a form of P2, expanded (only with P2)
//
// In P3 files, `H: alpha ; beta` is a line with alpha in s,t and beta in x,y, and
// `V^m: x ; y` is the fat line V(x,y)^m.

enum class Ambient { p1xp2, p2, p3 };

inline std::string to_string(Ambient a) {
  switch (a) {
    case Ambient::p1xp2:
      return "P1xP2";
    case Ambient::p2:
      return "P2";
    case Ambient::p3:
      return "P3";
  }
  return "?";
}

enum class EntryKind { horizontal, vertical, point, form };

template <Field F>
struct ConfigEntry {
  EntryKind kind;
  int multiplicity = 1;
  Polynomial<F> first;
  std::optional<Polynomial<F>> second;
  int line = 0;
};

template <Field F>
struct ConfigFile {
  std::optional<std::string> field;
  Ambient ambient = Ambient::p1xp2;
  std::vector<ConfigEntry<F>> entries;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline int column_of(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  auto h = line.find('#');
  return h == std::string_view::npos ? line : line.substr(0, h);
}

}  // namespace detail

/// The `field` header of a configuration text, if present. Only that line is
/// inspected, so the coefficient field can be chosen before the full parse.
inline std::optional<std::string> config_field(std::string_view text) {
  for (auto raw : detail::split_lines(text)) {
    auto line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (line.substr(0, 5) == "field" && (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5]))))
      return std::string(detail::trim(line.substr(5)));
    return std::nullopt;
  }
  return std::nullopt;
}

/// Parses a configuration text. Errors carry 1-based line and column. Content
/// checks (which variables a form may use, independence) happen when the file is
/// turned into a geometric object.
template <Field F>
ConfigFile<F> parse_config(std::string_view text) {
  ConfigFile<F> file;
  bool have_ambient = false;
  int lineno = 0;
  for (auto raw : detail::split_lines(text)) {
    ++lineno;
    auto line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    const int col = detail::column_of(raw, line);

    if (line.substr(0, 5) == "field" && (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
      if (have_ambient || !file.entries.empty()) throw ParseError("field must come before the ambient tag", lineno, col);
      if (file.field) throw ParseError("duplicate field line", lineno, col);
      auto spec = detail::trim(line.substr(5));
      if (spec.empty()) throw ParseError("field needs a prime or Q", lineno, col + 5);
      bool digits = std::all_of(spec.begin(), spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (spec != "Q" && !digits) throw ParseError("field must be a prime or Q", lineno, detail::column_of(raw, spec));
      file.field = std::string(spec);
      continue;
    }
    if (line == "P1xP2" || line == "P2" || line == "P3") {
      if (have_ambient) throw ParseError("duplicate ambient tag", lineno, col);
      if (!file.entries.empty()) throw ParseError("ambient tag must precede components", lineno, col);
      file.ambient = line == "P1xP2" ? Ambient::p1xp2 : line == "P2" ? Ambient::p2 : Ambient::p3;
      have_ambient = true;
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected a header, an ambient tag or 'KIND: ...'", lineno, col);
    auto head = detail::trim(line.substr(0, colon));
    std::string_view kind = head;
    int mult = 1;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
      kind = detail::trim(head.substr(0, caret));
      auto m = detail::trim(head.substr(caret + 1));
      if (m.empty() || !std::all_of(m.begin(), m.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("multiplicity must be a positive integer", lineno, detail::column_of(raw, m.empty() ? head.substr(caret) : m));
      if (m.size() > 4) throw ParseError("multiplicity too large", lineno, detail::column_of(raw, m));
      mult = std::stoi(std::string(m));
      if (mult < 1) throw ParseError("multiplicity must be a positive integer", lineno, detail::column_of(raw, m));
    }
    ConfigEntry<F> e;
    e.line = lineno;
    e.multiplicity = mult;
    if (kind == "H")
      e.kind = EntryKind::horizontal;
    else if (kind == "V")
      e.kind = EntryKind::vertical;
    else if (kind == "PT")
      e.kind = EntryKind::point;
    else if (kind == "F")
      e.kind = EntryKind::form;
    else
      throw ParseError("unknown component kind '" + std::string(kind) + "'", lineno, detail::column_of(raw, kind));
    if (!have_ambient) throw ParseError("ambient tag (P1xP2, P2 or P3) must precede components", lineno, col);
    if (e.kind == EntryKind::form && mult != 1) throw ParseError("F takes no multiplicity", lineno, col);

    auto body = line.substr(colon + 1);
    auto parse_part = [&](std::string_view part) {
      auto t = detail::trim(part);
      int c = t.empty() ? detail::column_of(raw, part) : detail::column_of(raw, t);
      if (t.empty()) throw ParseError("missing form", lineno, c);
      return parse_polynomial<F>(t, kMaskSTXYZ, lineno, c - 1);
    };
    auto semi = body.find(';');
    if (e.kind == EntryKind::form) {
      if (semi != std::string_view::npos) throw ParseError("F takes a single form", lineno, detail::column_of(raw, body.substr(semi)));
      e.first = parse_part(body);
    } else {
      if (semi == std::string_view::npos) throw ParseError("expected two forms separated by ';'", lineno, detail::column_of(raw, body) + static_cast<int>(body.size()));
      auto rest = body.substr(semi + 1);
      if (rest.find(';') != std::string_view::npos) throw ParseError("too many ';'", lineno, detail::column_of(raw, rest.substr(rest.find(';'))));
      e.first = parse_part(body.substr(0, semi));
      e.second = parse_part(rest);
    }
    file.entries.push_back(std::move(e));
  }
  if (!have_ambient) throw ParseError("missing ambient tag (P1xP2, P2 or P3)", lineno > 0 ? lineno : 1, 1);
  return file;
}

namespace detail {

template <Field F>
LinearForm<F> form_at(const Polynomial<F>& f, VarMask block, int line) {
  try {
    return LinearForm<F>::from_polynomial(f, block);
  } catch (const DomainError& e) {
    throw SemanticError(e.what(), line);
  }
}

template <Field F>
void require_kinds(const ConfigFile<F>& file, std::initializer_list<EntryKind> allowed) {
  for (const auto& e : file.entries)
    if (std::find(allowed.begin(), allowed.end(), e.kind) == allowed.end())
      throw SemanticError("component kind not allowed in " + to_string(file.ambient), e.line);
}

}  // namespace detail

/// Configuration of a P1xP2 file. Repeated supports are merged (see Configuration::make).
template <Field F>
Configuration<F> to_configuration(const ConfigFile<F>& file, std::vector<std::string>* warnings = nullptr) {
  if (file.ambient != Ambient::p1xp2) throw SemanticError("expected a P1xP2 configuration", 1);
  detail::require_kinds(file, {EntryKind::horizontal, EntryKind::vertical});
  std::vector<HorizontalLine<F>> hs;
  std::vector<VerticalLine<F>> vs;
  for (const auto& e : file.entries) {
    if (e.kind == EntryKind::horizontal) {
      hs.push_back({detail::form_at(e.first, kMaskST, e.line), detail::form_at(*e.second, kMaskXYZ, e.line), e.multiplicity});
    } else {
      auto B = detail::form_at(e.first, kMaskXYZ, e.line);
      auto Bp = detail::form_at(*e.second, kMaskXYZ, e.line);
      try {
        vs.emplace_back(B, Bp, e.multiplicity);
      } catch (const DomainError& err) {
        throw SemanticError(err.what(), e.line);
      }
    }
  }
  return Configuration<F>::make(std::move(hs), std::move(vs), warnings);
}

template <Field F>
struct PlaneData {
  FatPointsP2<F> points;
  std::optional<Polynomial<F>> form;
};

/// Fat points (and the optional form F) of a P2 file.
template <Field F>
PlaneData<F> to_fat_points(const ConfigFile<F>& file) {
  if (file.ambient != Ambient::p2) throw SemanticError("expected a P2 file", 1);
  detail::require_kinds(file, {EntryKind::point, EntryKind::form});
  PlaneData<F> out;
  for (const auto& e : file.entries) {
    if (e.kind == EntryKind::form) {
      if (out.form) throw SemanticError("more than one F line", e.line);
      if (e.first.is_zero()) throw SemanticError("F must be nonzero", e.line);
      if ((e.first.support() & ~kMaskXYZ) != 0 || !e.first.is_homogeneous())
        throw SemanticError("F must be a form in x,y,z", e.line);
      out.form = e.first;
      continue;
    }
    auto B = detail::form_at(e.first, kMaskXYZ, e.line);
    auto Bp = detail::form_at(*e.second, kMaskXYZ, e.line);
    try {
      out.points.add(B, Bp, e.multiplicity);
    } catch (const DomainError& err) {
      throw SemanticError(err.what(), e.line);
    }
  }
  return out;
}

/// Line configuration of a P3 file.
template <Field F>
P3LineConfig<F> to_p3_config(const ConfigFile<F>& file) {
  if (file.ambient != Ambient::p3) throw SemanticError("expected a P3 file", 1);
  detail::require_kinds(file, {EntryKind::horizontal, EntryKind::vertical});
  const VarMask xy = mask_of(Var::x) | mask_of(Var::y);
  P3LineConfig<F> Y;
  bool have_fat = false;
  for (const auto& e : file.entries) {
    if (e.kind == EntryKind::horizontal) {
      if (e.multiplicity != 1) throw SemanticError("P3 lines are reduced", e.line);
      Y.lines.push_back({detail::form_at(e.first, kMaskST, e.line), detail::form_at(*e.second, xy, e.line)});
      continue;
    }
    if (have_fat) throw SemanticError("only one fat line", e.line);
    auto B = detail::form_at(e.first, xy, e.line);
    auto Bp = detail::form_at(*e.second, xy, e.line);
    if (!common_zero(B, Bp)) throw SemanticError("fat line needs independent forms", e.line);
    Y.m = e.multiplicity;
    have_fat = true;
  }
  return Y;
}

namespace detail {

inline std::string head(const char* kind, int m) { return std::string(kind) + (m == 1 ? "" : "^" + std::to_string(m)) + ": "; }

}  // namespace detail

/// Configuration text that parses back to Z.
template <Field F>
std::string format_configuration(const Configuration<F>& Z) {
  std::ostringstream out;
  out << "field " << F::name() << "\nP1xP2\n";
  for (const auto& h : Z.horizontals())
    out << detail::head("H", h.multiplicity) << h.A.to_string() << " ; " << h.B.to_string() << "\n";
  for (const auto& v : Z.verticals())
    out << detail::head("V", v.multiplicity()) << v.B().to_string() << " ; " << v.Bp().to_string() << "\n";
  return out.str();
}

template <Field F>
std::string format_plane_data(const PlaneData<F>& d) {
  std::ostringstream out;
  out << "field " << F::name() << "\nP2\n";
  for (const auto& p : d.points.points())
    out << detail::head("PT", p.multiplicity) << p.B.to_string() << " ; " << p.Bp.to_string() << "\n";
  if (d.form) out << "F: " << d.form->to_string() << "\n";
  return out.str();
}

template <Field F>
std::string format_p3_config(const P3LineConfig<F>& Y) {
  std::ostringstream out;
  out << "field " << F::name() << "\nP3\n";
  for (const auto& [a, b] : Y.lines) out << "H: " << a.to_string() << " ; " << b.to_string() << "\n";
  if (Y.m > 0) out << detail::head("V", Y.m) << "x ; y\n";
  return out.str();
}

}  // namespace lineacm
