// Command-line front end: reads configuration files, runs the criteria and
// prints verdicts as text or JSON.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <lineacm/lineacm.hpp>

namespace {

using lineacm::Json;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSemantic = 3, kNonGeneric = 4, kInconsistent = 5 };

struct Options {
  bool json = false;
  bool timing = false;
  std::string field;
  std::uint64_t seed = 0;

  std::string file;
  std::string mode = "auto";
  bool no_oracle = false;
  int tau_max = -1;
  std::size_t vertical = 0;
  int cap = 8;
  std::string question;
  int trials = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lineacm::DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Runner {
 public:
  Runner(const Options& opt, std::string command) : opt_(opt), command_(std::move(command)) {}

  template <lineacm::Field F>
  int run() {
    using namespace lineacm;
    const auto start = std::chrono::steady_clock::now();
    report_ = {{"command", command_}, {"field", F::name()}, {"seed", opt_.seed}};
    if (!opt_.file.empty()) report_["file"] = opt_.file;
    int code = kOk;
    if (command_ == "check acm")
      code = check_acm<F>();
    else if (command_ == "check local-cm")
      code = check_local_cm<F>();
    else if (command_ == "hvector")
      code = hvector<F>();
    else if (command_ == "fatten")
      code = fatten<F>();
    else if (command_ == "hat")
      code = hat<F>();
    else if (command_ == "explore")
      code = explore<F>();
    if (opt_.timing)
      report_["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opt_.json) std::cout << report_.dump(2) << "\n";
    if (opt_.timing && !opt_.json) text_ << "time: " << report_["timing_ms"].get<double>() << " ms\n";
    if (!opt_.json) std::cout << text_.str();
    return code;
  }

 private:
  template <lineacm::Field F>
  lineacm::ConfigFile<F> load() {
    return lineacm::parse_config<F>(read_file(opt_.file));
  }

  template <lineacm::Field F>
  lineacm::Configuration<F> load_configuration(const lineacm::ConfigFile<F>& file) {
    std::vector<std::string> warnings;
    auto Z = lineacm::to_configuration(file, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    if (!warnings.empty()) report_["warnings"] = warnings;
    return Z;
  }

  static const char* yes_no(bool b) { return b ? "true" : "false"; }

  template <lineacm::Field F>
  int check_acm() {
    using namespace lineacm;
    auto file = load<F>();
    if (opt_.mode != "auto" && opt_.mode != "oracle") throw DomainError("unknown mode '" + opt_.mode + "'");
    if (file.ambient == Ambient::p3) return check_acm_p3(to_p3_config(file));
    if (file.ambient != Ambient::p1xp2) throw SemanticError("check acm needs a P1xP2 or P3 file", 1);
    auto Z = load_configuration(file);
    if (Z.empty()) throw SemanticError("empty configuration", 1);
    const auto I = ideal_of_configuration(Z);
    auto notation = validate_notation(Z);

    std::optional<AcmVerdict> criterion;
    if (opt_.mode == "auto") {
      try {
        criterion = pencil_acm_test(Z);
      } catch (const NotApplicable&) {
      }
      if (!criterion) try {
          criterion = one_plane_acm_test(Z);
        } catch (const NotApplicable&) {
        }
    }
    std::optional<AcmVerdict> oracle;
    if (!criterion || !opt_.no_oracle) oracle = acm_oracle(I, OracleDim::surface_in_p4, opt_.seed);

    const auto betti = betti0_profile(I);
    const bool verdict = criterion ? criterion->verdict : oracle->verdict;
    Json verdicts = Json::array();
    if (criterion) verdicts.push_back(criterion->to_json());
    if (oracle) verdicts.push_back(oracle->to_json());
    report_["verdict"] = verdict;
    report_["verdicts"] = verdicts;
    report_["betti0"] = bidegrees_json(betti);
    report_["notation"] = notation.ok() ? "ok" : notation.summary();
    report_["generators"] = Json::array();
    for (const auto& g : minimal_generators(I)) report_["generators"].push_back(g.poly.to_string());

    text_ << "ACM: " << yes_no(verdict) << "\n";
    if (criterion) text_ << "criterion (" << criterion->method << "): " << yes_no(criterion->verdict) << "\n";
    if (oracle) text_ << "oracle: " << yes_no(oracle->verdict) << "\n";
    text_ << "betti0:";
    for (const auto& d : betti) text_ << " " << d.to_string();
    text_ << "\nnotation: " << (notation.ok() ? "ok" : notation.summary()) << "\n";

    if (criterion && oracle && criterion->verdict != oracle->verdict) {
      report_["error"] = "criterion and oracle disagree";
      std::cerr << "error: " << criterion->method << " criterion and oracle disagree\n";
      return kInconsistent;
    }
    return kOk;
  }

  template <lineacm::Field F>
  int check_acm_p3(const lineacm::P3LineConfig<F>& Y) {
    using namespace lineacm;
    std::optional<AcmVerdict> criterion;
    if (opt_.mode == "auto") try {
        criterion = p3_pencil_acm_test(Y);
      } catch (const NotApplicable&) {
      }
    std::optional<AcmVerdict> oracle;
    if (!criterion || !opt_.no_oracle) oracle = acm_oracle(Y.ideal(), OracleDim::curve_in_p3, opt_.seed);
    const bool verdict = criterion ? criterion->verdict : oracle->verdict;
    Json verdicts = Json::array();
    if (criterion) verdicts.push_back(criterion->to_json());
    if (oracle) verdicts.push_back(oracle->to_json());
    report_["verdict"] = verdict;
    report_["verdicts"] = verdicts;
    text_ << "ACM: " << yes_no(verdict) << "\n";
    if (criterion) text_ << "criterion (" << criterion->method << "): " << yes_no(criterion->verdict) << "\n";
    if (oracle) text_ << "oracle: " << yes_no(oracle->verdict) << "\n";
    if (criterion && oracle && criterion->verdict != oracle->verdict) {
      report_["error"] = "criterion and oracle disagree";
      std::cerr << "error: criterion and oracle disagree\n";
      return kInconsistent;
    }
    return kOk;
  }

  template <lineacm::Field F>
  int check_local_cm() {
    using namespace lineacm;
    auto Z = load_configuration(load<F>());
    auto combinatorial = is_fully_v_connected(Z);
    auto r = local_cm_oracle(Z, opt_.seed);
    report_["verdict"] = r.combinatorial;
    report_["local_cm"] = r.to_json();
    Json witness = nullptr;
    if (combinatorial.witness)
      witness = {{"horizontals", {combinatorial.witness->first, combinatorial.witness->second}},
                 {"point", combinatorial.point->to_string()},
                 {"required", combinatorial.required},
                 {"found", combinatorial.found}};
    report_["witness"] = witness;
    text_ << "locally CM (fully v-connected): " << yes_no(r.combinatorial) << "\n";
    text_ << "locally CM (oracle): " << yes_no(r.oracle) << "\n";
    for (const auto& p : r.points)
      text_ << "  point " << p.point.to_string() << ": n=" << p.n << " m=" << p.m << " oracle=" << yes_no(p.oracle)
            << "\n";
    if (combinatorial.witness)
      text_ << "witness: horizontals " << combinatorial.witness->first << "," << combinatorial.witness->second
            << " at " << combinatorial.point->to_string() << " need multiplicity " << combinatorial.required
            << ", found " << combinatorial.found << "\n";
    text_ << "agreement: " << yes_no(r.agree()) << "\n";
    if (!r.agree()) {
      std::cerr << "error: combinatorial criterion and oracle disagree\n";
      return kInconsistent;
    }
    return kOk;
  }

  static std::string row(const std::vector<long>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
    return out;
  }

  template <lineacm::Field F>
  int hvector() {
    using namespace lineacm;
    auto data = to_fat_points(load<F>());
    if (data.points.points().empty()) throw SemanticError("no points", 1);
    const auto IY = data.points.ideal();
    auto h = h_vector(IY);
    report_["h_vector"] = h.entries;
    report_["degree"] = h.degree();
    text_ << "h_Y: " << h.row() << "\n";
    if (opt_.tau_max >= 0) {
      auto H = hilbert_function(IY, opt_.tau_max);
      report_["hilbert_function"] = H;
      text_ << "H_Y(0.." << opt_.tau_max << "): " << row(H) << "\n";
    }
    if (!data.form) return kOk;
    auto t = prop_saturation_test(data.points, *data.form);
    report_["table"] = t.to_json();
    report_["verdict"] = t.saturated;
    auto rows = t.rows();
    text_ << "table:\n";
    text_ << "  h_Y   " << row(rows[0]) << "\n";
    text_ << "  h_Y1  " << row(rows[1]) << "\n";
    text_ << "  h_Y2  " << row(rows[2]) << "   (shifted by " << t.d << ")\n";
    text_ << "verdict: " << (t.saturated ? "saturated" : "not saturated") << "\n";
    if (!t.consistent()) {
      std::cerr << "error: h-vector criterion and direct saturation test disagree\n";
      return kInconsistent;
    }
    return kOk;
  }

  template <lineacm::Field F>
  int fatten() {
    using namespace lineacm;
    auto Z = load_configuration(load<F>());
    auto r = min_fattening(Z, opt_.vertical, opt_.seed, opt_.cap);
    report_["result"] = r.to_json();
    if (r.multiplicity)
      text_ << "least multiplicity: " << *r.multiplicity << " (" << r.method << ")\n";
    else
      text_ << "NotFound (cap " << r.cap << ")\n";
    return kOk;
  }

  template <lineacm::Field F>
  int hat() {
    using namespace lineacm;
    auto H = hat_of(load_configuration(load<F>()));
    auto text = format_configuration(H);
    report_["config"] = text;
    text_ << text;
    return kOk;
  }

  template <lineacm::Field F>
  int explore() {
    using namespace lineacm;
    Question q;
    if (opt_.question == "hatz-betti")
      q = Question::hatz_betti;
    else if (opt_.question == "fully-v-plus-hat")
      q = Question::fully_v_plus_hat;
    else
      throw DomainError("unknown question '" + opt_.question + "'");
    auto s = explore_open_question<F>(q, opt_.trials, opt_.seed);
    report_["summary"] = s.to_json();
    text_ << "experimental evidence (" << s.question << "), " << s.trials << " trials, seed " << s.seed << "\n";
    text_ << "  meeting the hypotheses: " << s.considered << "\n";
    text_ << "  ACM (supporting): " << s.supporting.size() << "\n";
    text_ << "  not ACM (contradicting): " << s.contradicting.size() << "\n";
    text_ << "  excluded by the filter: " << s.excluded.size() << "\n";
    for (const auto& e : s.excluded)
      if (e.trial < 0) text_ << "  fixture excluded (" << e.note << "):\n" << e.config;
    for (const auto& c : s.contradicting) text_ << "  counterexample, trial " << c.trial << " seed " << c.seed << ":\n" << c.config;
    return kOk;
  }

  const Options& opt_;
  std::string command_;
  Json report_;
  std::ostringstream text_;
};

int dispatch(const Options& opt, const std::string& command) {
  std::string field = opt.field;
  if (field.empty() && !opt.file.empty()) field = lineacm::config_field(read_file(opt.file)).value_or("");
  if (field.empty()) field = "32003";
  Runner runner(opt, command);
  if (field == "32003") return runner.run<lineacm::Zp<32003>>();
  if (field == "65521") return runner.run<lineacm::Zp<65521>>();
  if (field == "Q") return runner.run<lineacm::Rational>();
  throw lineacm::DomainError("unsupported field '" + field + "' (use 32003, 65521 or Q)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ACM and local Cohen-Macaulay tests for fat line configurations in P1xP2"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "print a JSON report")->configurable(false);
  app.add_flag("--timing", opt.timing, "add wall-clock time to the report");
  app.add_option("--field", opt.field, "coefficient field: 32003, 65521 or Q (overrides the file)");
  app.add_option("--seed", opt.seed, "seed for every random choice");
  app.fallthrough();

  auto* check = app.add_subcommand("check", "decide a property")->require_subcommand(1)->fallthrough();
  auto* acm = check->add_subcommand("acm", "arithmetically Cohen-Macaulay test");
  acm->add_option("file", opt.file)->required();
  acm->add_option("--mode", opt.mode, "auto (criterion, then oracle) or oracle");
  acm->add_flag("--no-oracle", opt.no_oracle, "skip the cross-check oracle when a criterion applies");
  auto* lcm = check->add_subcommand("local-cm", "locally Cohen-Macaulay test");
  lcm->add_option("file", opt.file)->required();

  auto* hv = app.add_subcommand("hvector", "h-vector of fat points, and the saturation table when F is given");
  hv->add_option("file", opt.file)->required();
  hv->add_option("--tau-max", opt.tau_max, "also print the Hilbert function up to this degree");

  auto* fat = app.add_subcommand("fatten", "least multiplicity of a vertical line making Z ACM");
  fat->add_option("file", opt.file)->required();
  fat->add_option("--vertical", opt.vertical, "index of the vertical line")->required();
  fat->add_option("--cap", opt.cap, "largest multiplicity tried");

  auto* hat = app.add_subcommand("hat", "print the hat configuration");
  hat->add_option("file", opt.file)->required();

  auto* ex = app.add_subcommand("explore", "gather evidence on an open question");
  ex->add_option("--question", opt.question, "hatz-betti or fully-v-plus-hat")->required();
  ex->add_option("--trials", opt.trials, "number of random configurations")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  std::string command;
  if (acm->parsed())
    command = "check acm";
  else if (lcm->parsed())
    command = "check local-cm";
  else if (hv->parsed())
    command = "hvector";
  else if (fat->parsed())
    command = "fatten";
  else if (hat->parsed())
    command = "hat";
  else
    command = "explore";

  try {
    return dispatch(opt, command);
  } catch (const lineacm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const lineacm::NonGenericError& e) {
    std::cerr << "non-generic: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const lineacm::InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const lineacm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
}
