// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <lineacm executable> <samples directory>

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace lineacm;
using namespace lineacm::testing;
using F = Zp<32003>;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_samples;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "failed: " + what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

/// stdout and exit status of a CLI invocation.
std::pair<std::string, int> run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string sample(const std::string& name) { return "\"" + g_samples + "/" + name + "\""; }

bool oracle(const Configuration<F>& Z, std::uint64_t seed) {
  return acm_oracle(ideal_of_configuration(Z), OracleDim::surface_in_p4, seed).verdict;
}

Configuration<F> pencil_instance(int n, int m, std::uint64_t seed) {
  RandomConfigParams p{ConfigMode::pencil};
  p.pencil_n = n;
  p.pencil_m = m;
  return random_configuration<F>(p, seed);
}

FatPointsP2<F> with_points(FatPointsP2<F> Y, std::initializer_list<std::array<int, 3>> pts, int m = 1) {
  for (auto c : pts) Y.add(P2Point<F>::normalized({F::from_int(c[0]), F::from_int(c[1]), F::from_int(c[2])}), m);
  return Y;
}

// 1
Outcome liaison() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto stated = polys<F>({"s^2*t*x + s*t^2*x", "x^2*y*z + x*y^2*z + x*y*z^2", "s*t*y", "t*x*y"});
  auto I = ideal_of_configuration(liaison_config<F>());
  o.require(oracle(liaison_config<F>(), 1), "oracle verdict");
  o.require(betti0_profile(I) == std::vector<Bidegree>{{0, 4}, {1, 2}, {2, 1}, {3, 1}}, "bidegree multiset");
  for (const auto& g : stated) o.require(normal_form(g, I.groebner()).is_zero(), g.to_string() + " not in I_Z");
  const auto J = buchberger(stated);
  for (const auto& g : I.groebner().generators()) o.require(normal_form(g, J).is_zero(), "I_Z not in stated ideal");
  auto [out, rc] = run_cli("check acm " + sample("liaison.cfg"));
  o.require(rc == 0 && out.find("ACM: true") != std::string::npos, "CLI verdict");
  o.require(out.find("betti0: (0,4) (1,2) (2,1) (3,1)") != std::string::npos, "CLI bidegrees");
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime");
  if (o.pass) o.detail = "ACM, bidegrees (0,4) (1,2) (2,1) (3,1), stated generators equal I_Z, " + fixed(dt) + " s";
  return o;
}

// 2
Outcome three_lines() {
  Outcome o;
  auto p = betti0_profile(ideal_of_configuration(three_lines_config<F>()));
  o.require(p == std::vector<Bidegree>{{0, 2}, {1, 1}, {1, 1}}, "bidegree multiset");
  auto [out, rc] = run_cli("check acm " + sample("threelines.cfg"));
  o.require(rc == 0 && out.find("betti0: (0,2) (1,1) (1,1)") != std::string::npos, "CLI bidegrees");
  if (o.pass) o.detail = "bidegrees (0,2) (1,1) (1,1)";
  return o;
}

// 3
Outcome acm_examples() {
  Outcome o;
  o.require(!oracle(hat_example_config<F>(), 1), "(t,x)∩(s,y) should not be ACM");
  o.require(oracle(hat_of(hat_example_config<F>()), 2), "its hat should be ACM");
  o.require(!oracle(x_config<F>(1), 3), "reduced vertical should not be ACM");
  o.require(oracle(x_config<F>(2), 4), "doubled vertical should be ACM");
  auto cli = [&](const char* file, const char* expect) {
    auto [out, rc] = run_cli(std::string("check acm ") + sample(file));
    o.require(rc == 0 && out.find(expect) != std::string::npos, std::string("CLI on ") + file);
  };
  cli("hat_example.cfg", "ACM: false");
  cli("xexample.cfg", "ACM: false");
  cli("xexample_m2.cfg", "ACM: true");
  auto [hat, rc] = run_cli("hat " + sample("hat_example.cfg"));
  o.require(rc == 0, "CLI hat");
  if (rc == 0) {
    auto Zh = to_configuration(parse_config<F>(hat));
    o.require(oracle(Zh, 5), "CLI hat output should be ACM");
  }
  if (o.pass) o.detail = "false / true / false / true as expected";
  return o;
}

// 4
Outcome saturation_tables() {
  Outcome o;
  const auto m = irrelevant_ideal<F>(Grading::standard_p2);
  const auto base = five_points<F>();
  using Rows = std::vector<std::vector<long>>;
  struct Case {
    const char* name;
    FatPointsP2<F> Y;
    Rows rows;
    bool saturated;
  };
  const Rows full{{1, 2, 3, 4, 1}, {1, 2, 3, 4, 0}, {0, 0, 0, 0, 1}};
  std::vector<Case> cases{
      {"base", base, {{1, 2, 2, 0, 0}, {1, 2, 1, 0, 0}, {0, 0, 0, 0, 1}}, false},
      {"(i)", with_points(base, {{-11, 11, 10}, {-23, 23, 10}, {-22, 11, 5}, {-18, 9, 5}, {-3, 1, 1}, {-28, 7, 5}}),
       full, true},
      {"(ii)", with_points(base, {{0, 0, 1}}, 3), full, true},
      {"(iii)", with_points(base, {{-1, 1, 1}, {-2, 1, 1}, {-3, 1, 1}, {-4, 1, 1}}),
       {{1, 2, 3, 2, 1}, {1, 2, 3, 2, 0}, {0, 0, 0, 0, 1}}, true},
  };
  for (const auto& c : cases) {
    auto t = prop_saturation_test(c.Y, quartic<F>());
    o.require(t.d == 4 && t.rows() == c.rows, std::string(c.name) + " table");
    o.require(t.equality == c.saturated, std::string(c.name) + " verdict");
    o.require(is_saturated(ideal_sum(c.Y.ideal(), quartic<F>()), m) == t.equality,
              std::string(c.name) + " disagrees with is_saturated");
  }
  auto [out, rc] = run_cli("hvector " + sample("fivepoints.cfg"));
  o.require(rc == 0 && out.find("verdict: not saturated") != std::string::npos, "CLI base verdict");
  for (const char* f : {"fivepoints_i.cfg", "fivepoints_ii.cfg", "fivepoints_iii.cfg"}) {
    auto [o2, rc2] = run_cli(std::string("hvector ") + sample(f));
    o.require(rc2 == 0 && o2.find("verdict: saturated") != std::string::npos, std::string("CLI ") + f);
  }
  if (o.pass) o.detail = "4 tables reproduced, verdicts not saturated / saturated x3, agree with is_saturated";
  return o;
}

// The grid of the pencil sweeps: n = 2..5, m = 0..5 (contains m = 0..n), 10 seeds.
template <class Fn>
int pencil_grid(Fn&& fn) {
  int count = 0;
  for (int n = 2; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (std::uint64_t k = 0; k < 10; ++k, ++count) fn(n, m, 1000 * n + 100 * m + k);
  return count;
}

// 5
Outcome pencil_sweep() {
  Outcome o;
  const auto t0 = Clock::now();
  int agree = 0;
  int total = pencil_grid([&](int n, int m, std::uint64_t seed) {
    bool v = oracle(pencil_instance(n, m, seed), seed ^ 0x5eed);
    if (v == (m >= n - 1)) ++agree;
  });
  const double dt = seconds_since(t0);
  o.require(total == 240 && agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree");
  o.require(dt < 600.0, "runtime");
  if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree, " + fixed(dt, 1) + " s";
  return o;
}

// 6
Outcome p3_sweep() {
  Outcome o;
  int agree = 0, criterion_agree = 0;
  int total = pencil_grid([&](int n, int m, std::uint64_t seed) {
    auto Z = pencil_instance(n, m, seed);
    Rng rng(seed ^ 0xabc);
    const auto p = *pencil_hypotheses(Z).point;
    Polynomial<F> L;
    do L = random_linear_form<F>(LinearFormKind::bidegree_01, rng);
    while (evaluate_at(form01(L), p).is_zero());
    bool v = acm_oracle(hyperplane_section_to_P3(Z, L), OracleDim::curve_in_p3, rng()).verdict;
    if (v == (m >= n - 1)) ++agree;
    if (p3_pencil_acm_test(p3_config_from_section(Z, L)).verdict == v) ++criterion_agree;
  });
  o.require(total == 240 && agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree");
  o.require(criterion_agree == total, "P3 pencil criterion disagrees with the curve oracle");
  if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree";
  return o;
}

// 7
Outcome local_cm() {
  Outcome o;
  int agree = 0, cm = 0;
  RandomConfigParams params;  // validate_notation holds, <= 4 horizontals, <= 3 verticals, multiplicity <= 3
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto Z = random_configuration<F>(params, 7000 + seed);
    if (!validate_notation(Z).ok()) {
      o.require(false, "generated configuration fails validate_notation");
      continue;
    }
    auto r = local_cm_oracle(Z, seed);
    if (r.oracle == is_fully_v_connected(Z).holds) ++agree;
    cm += r.oracle;
  }
  o.require(agree == 100, std::to_string(agree) + "/100 agree");
  if (o.pass) o.detail = "100/100 agree (" + std::to_string(cm) + " locally CM)";
  return o;
}

// 8
Outcome necessary_conditions() {
  Outcome o;
  RandomConfigParams params;
  int found = 0, violations = 0;
  std::uint64_t seed = 0;
  for (; found < 50 && seed < 5000; ++seed) {
    auto Z = random_configuration<F>(params, 9000 + seed);
    if (!oracle(Z, seed)) continue;
    ++found;
    auto r = hat_necessary_check(Z, seed);
    if (!r.z.verdict || !r.ok()) ++violations;
    if (!acm_betti_necessary(Z)) ++violations;
    if (!is_v_connected(Z).holds) ++violations;
  }
  o.require(found == 50, "only " + std::to_string(found) + " ACM configurations found");
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.pass) o.detail = "50 ACM configurations (" + std::to_string(seed) + " drawn), 0 violations";
  return o;
}

// 9
Outcome kernel_properties() {
  Outcome o;
  const auto t0 = Clock::now();
  int checks = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    o.require(ok, what);
  };

  auto field_axioms = [&]<class K>(K*) {
    Rng rng(1);
    const K one = K::from_int(1), zero = K::from_int(0);
    for (int k = 0; k < 1000; ++k) {
      K a = K::random(rng), b = K::random(rng), c = K::random(rng);
      bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a + (-a) == zero &&
                (a.is_zero() || a * a.inverse() == one);
      check(ok, "field axioms in " + K::name());
    }
  };
  field_axioms(static_cast<F*>(nullptr));
  field_axioms(static_cast<Rational*>(nullptr));

  Rng rng(2);
  const VarMask vars = kMaskSTXY;
  auto random_form = [&](unsigned d, int terms) {
    auto monos = monomials_of_degree(vars, d);
    std::vector<Term<F>> ts;
    for (int k = 0; k < terms; ++k) ts.push_back({monos[rng() % monos.size()], F::random(rng)});
    return Polynomial<F>::from_terms(ts);
  };
  const auto g3 = Grading::standard_p3;
  const auto m3 = irrelevant_ideal<F>(g3);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial<F>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_form(1 + rng() % 2, 3));
    Ideal<F> I(gens, g3);
    const auto& gb = I.groebner();
    for (int c = 0; c < 100; ++c) {
      Polynomial<F> f;
      for (const auto& g : gens) f += g * random_form(4 - g.degree(), 3);
      check(normal_form(f, gb).is_zero(), "combination of generators not reduced to 0");
      if (c % 10 == 0) {
        auto h = random_form(4, 4);
        check(normal_form(h, gb).is_zero() == naive_contains(gens, vars, h), "membership disagrees with linear algebra");
      }
    }
    Ideal<F> J({random_form(1, 3), random_form(2, 3)}, g3);
    auto meet = ideal_intersection(I, J);
    check(I.contains(meet) && J.contains(meet) && meet.contains(ideal_product(I, J)), "intersection inclusions");
    for (unsigned d = 1; d <= 4; ++d) {
      auto both = gens;
      both.insert(both.end(), J.generators().begin(), J.generators().end());
      long expect = static_cast<long>(DegreePiece<F>(gens, vars, d).rank() + DegreePiece<F>(J.generators(), vars, d).rank()) -
                    static_cast<long>(DegreePiece<F>(both, vars, d).rank());
      check(static_cast<long>(DegreePiece<F>(meet.generators(), vars, d).rank()) == expect,
            "every common element lies in the intersection");
    }
    auto f = random_form(1, 3);
    auto Q = ideal_colon(I, f);
    for (int k = 0; k < 5; ++k) {
      auto h = random_form(2, 3);
      check(Q.contains(h) == naive_contains(gens, vars, h * f), "colon adjunction");
    }
    auto S = saturate(ideal_product(I, m3), m3);
    check(saturate(S, m3) == S && is_saturated(S, m3), "saturation idempotence");
  }

  for (int k = 0; k < 100; ++k) {
    FatPointsP2<F> Y;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j)
      Y.add(P2Point<F>::normalized({F::random(rng), F::random(rng), F::from_int(1)}), 1 + static_cast<int>(rng() % 3));
    check(h_vector(Y.ideal()).degree() == degree_of_fat_points(Y.multiplicities(), 2), "fat point degree");
  }
  const double dt = seconds_since(t0);
  o.require(dt < 120.0, "runtime");
  if (o.pass) o.detail = std::to_string(checks) + " checks, 0 failures, " + fixed(dt, 1) + " s";
  return o;
}

// 10
Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands{
      "check acm " + sample("liaison.cfg"),
      "check acm " + sample("xexample.cfg") + " --mode oracle",
      "check acm " + sample("p3_pencil.cfg"),
      "check local-cm " + sample("xexample.cfg"),
      "hvector " + sample("fivepoints_ii.cfg"),
      "fatten " + sample("xexample.cfg") + " --vertical 0",
      "fatten " + sample("fully_v_not_acm.cfg") + " --vertical 0 --cap 3",
      "hat " + sample("xexample_m2.cfg"),
      "explore --question hatz-betti --trials 8",
      "explore --question fully-v-plus-hat --trials 8",
  };
  int same = 0;
  for (const auto& c : commands) {
    for (const char* field : {"32003", "Q"}) {
      const std::string args = std::string("--json --field ") + field + " --seed 17 " + c;
      auto a = run_cli(args), b = run_cli(args);
      bool ok = a.second == 0 && a == b && !a.first.empty() && nlohmann::json::accept(a.first);
      o.require(ok, args);
      same += ok;
    }
  }
  if (o.pass) o.detail = std::to_string(same) + " commands byte-identical across reruns";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <lineacm executable> <samples directory>\n";
    return 2;
  }
  g_cli = argv[1];
  g_samples = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"liaison example", liaison},
      {"three-line example", three_lines},
      {"ACM examples and hats", acm_examples},
      {"saturation tables", saturation_tables},
      {"pencil sweep", pencil_sweep},
      {"P3 pencil sweep", p3_sweep},
      {"local CM", local_cm},
      {"necessary conditions", necessary_conditions},
      {"kernel properties", kernel_properties},
      {"determinism", determinism},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << (k + 1 < 10 ? " " : "") << k + 1 << "  " << criteria[k].first << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
