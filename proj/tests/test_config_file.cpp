#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace lineacm;
using namespace lineacm::testing;

namespace {

template <class Fn>
std::pair<int, int> parse_error_position(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

int semantic_error_line(auto&& fn) {
  try {
    fn();
  } catch (const SemanticError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEMPLATE_TEST_CASE("parsing a P1xP2 configuration", "[config_file]", Zp<32003>, Rational) {
  using F = TestType;
  auto file = parse_config<F>(
      "# comment\n"
      "field 32003\n"
      "P1xP2\n"
      "H: s ; x   # trailing comment\n"
      "H^2: t ; x + y\n"
      "\n"
      "V^3: x ; y\n");
  REQUIRE(file.field == std::optional<std::string>("32003"));
  REQUIRE(file.ambient == Ambient::p1xp2);
  REQUIRE(file.entries.size() == 3);
  REQUIRE(file.entries[1].multiplicity == 2);
  REQUIRE(file.entries[2].line == 7);
  auto Z = to_configuration(file);
  REQUIRE(Z.horizontals().size() == 2);
  REQUIRE(Z.verticals()[0].multiplicity() == 3);
  REQUIRE(config_field("# x\nfield Q\nP2\n") == std::optional<std::string>("Q"));
  REQUIRE_FALSE(config_field("P2\n").has_value());
}

TEMPLATE_TEST_CASE("formatting round-trips", "[config_file]", Zp<32003>, Rational) {
  using F = TestType;
  auto Z = Configuration<F>::make({H<F>("s + 2*t", "x - 3*z"), H<F>("t", "y", 2)}, {V<F>("x", "y + z", 2)});
  auto text = format_configuration(Z);
  REQUIRE(text.rfind("field " + F::name() + "\nP1xP2\n", 0) == 0);
  auto back = to_configuration(parse_config<F>(text));
  REQUIRE(format_configuration(back) == text);
  REQUIRE(ideal_of_configuration(back) == ideal_of_configuration(Z));

  PlaneData<F> d{five_points<F>(), quartic<F>()};
  auto ptext = format_plane_data(d);
  auto pback = to_fat_points(parse_config<F>(ptext));
  REQUIRE(pback.points.ideal() == d.points.ideal());
  REQUIRE(*pback.form == *d.form);

  auto Y = p3_config_from_section(x_config<F>(2), poly<F>("x + y + z"));
  auto y3 = to_p3_config(parse_config<F>(format_p3_config(Y)));
  REQUIRE(y3.m == 2);
  REQUIRE(y3.ideal() == Y.ideal());
}

TEST_CASE("parse errors carry line and column", "[config_file]") {
  using F = Zp<32003>;
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nH: s ; 2x\n"); }) == std::pair{2, 9});
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nQ: s ; x\n"); }) == std::pair{2, 1});
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nH: s x\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nH: s ;\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nH: s ; x ; y\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nH^0: s ; x\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("P1xP2\nH^a: s ; x\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("H: s ; x\n"); }).first == 1);
  REQUIRE(parse_error_position([] { parse_config<F>("# nothing\n"); }).first > 0);
  REQUIRE(parse_error_position([] { parse_config<F>("P2\nP2\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("P2\nfield 7\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("field p\nP2\n"); }) == std::pair{1, 7});
  REQUIRE(parse_error_position([] { parse_config<F>("P2\nF^2: x\n"); }).first == 2);
  REQUIRE(parse_error_position([] { parse_config<F>("P2\nF: x ; y\n"); }).first == 2);
}

TEST_CASE("semantic errors carry the line", "[config_file]") {
  using F = Zp<32003>;
  auto conf = [](const char* text) { return [=] { to_configuration(parse_config<F>(text)); }; };
  REQUIRE(semantic_error_line(conf("P1xP2\nH: s ; x\nH: s ; s\n")) == 3);
  REQUIRE(semantic_error_line(conf("P1xP2\nH: x ; x\n")) == 2);
  REQUIRE(semantic_error_line(conf("P1xP2\nH: s ; x^2\n")) == 2);
  REQUIRE(semantic_error_line(conf("P1xP2\nV: x ; 2*x\n")) == 2);
  REQUIRE(semantic_error_line(conf("P1xP2\nPT: x ; y\n")) == 2);
  REQUIRE(semantic_error_line(conf("P2\nPT: x ; y\n")) == 1);
  auto plane = [](const char* text) { return [=] { to_fat_points(parse_config<F>(text)); }; };
  REQUIRE(semantic_error_line(plane("P2\nPT: x ; y\nF: x\nF: y\n")) == 4);
  REQUIRE(semantic_error_line(plane("P2\nF: s\n")) == 2);
  REQUIRE(semantic_error_line(plane("P2\nF: x^2 + y\n")) == 2);
  REQUIRE(semantic_error_line(plane("P2\nH: s ; x\n")) == 2);
  auto p3 = [](const char* text) { return [=] { to_p3_config(parse_config<F>(text)); }; };
  REQUIRE(semantic_error_line(p3("P3\nH^2: s ; x\n")) == 2);
  REQUIRE(semantic_error_line(p3("P3\nH: s ; z\n")) == 2);
  REQUIRE(semantic_error_line(p3("P3\nV: x ; y\nV^2: x ; y\n")) == 3);
}

TEST_CASE("duplicate components produce warnings", "[config_file]") {
  using F = Zp<32003>;
  std::vector<std::string> warnings;
  auto Z = to_configuration(parse_config<F>("P1xP2\nH: s ; x\nH^2: 2*s ; x\n"), &warnings);
  REQUIRE(Z.horizontals().size() == 1);
  REQUIRE(Z.horizontals()[0].multiplicity == 2);
  REQUIRE(warnings.size() == 1);
}

TEST_CASE("fat point entries keep their multiplicity", "[config_file]") {
  using F = Zp<32003>;
  auto text = std::string("field 32003\nP2\nPT^3: x ; y\nF: x^4 + 10*x^3*y + 35*x^2*y^2 + 50*x*y^3 + 24*y^4\n");
  auto d = to_fat_points(parse_config<F>(text));
  REQUIRE(d.points.multiplicities() == std::vector<int>{3});
  REQUIRE(*d.form == quartic<F>());
}
