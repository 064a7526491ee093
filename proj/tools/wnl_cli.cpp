// wnl: command-line front end for the weighted-norm library.
//
//   wnl constants      --n-max 10 [--format json|csv]
//   wnl norm           --poly P.json --mode v [--s 0.5] [--space 4,2]
//   wnl counterexample --family Pr|Q|fN [--p 2 --k 2 --r 0.9 --n-trunc 64 --s-grid ...] [--out rows.csv]
//   wnl bollobas       --poly P.json --x x.json --eps 0.1 --mode practical
//   wnl verify         [--filter norms.]
//
// Global knobs (--seed, --restarts, --max-iters, ...) may follow the
// subcommand. --config reads a JSON object whose keys are flag names; nested
// objects hold subcommand flags. Flags given on the command line win.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error, 64 usage.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wnl/wnl.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

/// JSON config files for CLI11: scalars and arrays become option inputs,
/// objects become subcommand sections.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      j = json::parse(input);
    } catch (const json::exception& e) {
      throw CLI::ConversionError("config", e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config", "top level must be an object");
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static void collect(const json& obj, std::vector<std::string> parents, std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, value] : obj.items()) {
      std::string name = key;
      std::replace(name.begin(), name.end(), '_', '-');
      if (value.is_object()) {
        auto sub = parents;
        sub.push_back(name);
        collect(value, sub, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = name;
      if (value.is_array()) {
        for (const auto& e : value) item.inputs.push_back(scalar(e));
      } else {
        item.inputs.push_back(scalar(value));
      }
      out.push_back(std::move(item));
    }
  }
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

wnl::LpSpace parse_space(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Usage("--space expects n,p (p may be inf)");
  try {
    const long n = std::stol(text.substr(0, comma));
    const std::string ptext = text.substr(comma + 1);
    const double p = ptext == "inf" ? wnl::kInfinity : std::stod(ptext);
    if (n < 1) throw Usage("--space: n must be positive");
    return wnl::LpSpace(static_cast<std::size_t>(n), p);
  } catch (const std::logic_error&) {
    throw Usage("--space expects n,p (p may be inf)");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw Usage("expected a comma-separated list of numbers, got '" + text + "'");
    }
  }
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json to_json(const wnl::NormResult& r) {
  const auto& d = r.diagnostics;
  return {{"schema", "1"},
          {"mode", std::string(wnl::to_string(r.mode))},
          {"value", r.value},
          {"witness", wnl::io::to_json(r.witness.coords())},
          {"s_star", r.s_star},
          {"s", r.s},
          {"diagnostics",
           {{"iterations", d.iterations},
            {"restarts_used", d.restarts_used},
            {"best_per_restart", d.best_per_restart},
            {"converged", d.converged},
            {"direct_value", d.direct_value},
            {"method_mismatch", d.method_mismatch},
            {"endpoint_argmax", d.endpoint_argmax},
            {"s_max", d.s_max}}}};
}

json to_json(const wnl::BollobasStep& st) {
  const auto& loc = st.localization;
  return {{"schema", "1"},
          {"record", "step"},
          {"n", st.n},
          {"rho", st.rho},
          {"x", wnl::io::to_json(st.x.coords())},
          {"v_norm", st.v_norm},
          {"margin", st.margin},
          {"required_slack", st.required_slack},
          {"localization",
           {{"holds", loc.holds},
            {"lhs", loc.lhs},
            {"rhs", loc.rhs},
            {"mu", loc.mu},
            {"hypotheses_met", loc.hypotheses_met},
            {"witness_distance", loc.witness_distance}}},
          {"x_next", wnl::io::to_json(st.x_next.coords())},
          {"v_next", st.v_next},
          {"margin_next", st.margin_next},
          {"dist_next", st.dist_next},
          {"drift", st.drift},
          {"drift_bound", st.drift_bound},
          {"telescoping", st.telescoping},
          {"telescoping_bound", st.telescoping_bound},
          {"contraction_excess", st.contraction_excess},
          {"retries", st.retries}};
}

json verdict_json(const wnl::BollobasResult& r, const std::string& error) {
  const auto mon = wnl::cauchy_monitor(r);
  json out{{"schema", "1"},
           {"record", "verdict"},
           {"mode", std::string(wnl::to_string(r.mode))},
           {"eps", r.eps},
           {"M", r.M},
           {"eta", r.eta},
           {"iterations", r.steps.size()},
           {"input_v_norm", r.input_v_norm},
           {"input_margin", r.input_margin},
           {"sup_distance", r.sup_distance},
           {"span_distance", r.span_distance},
           {"attainment_margin", r.attainment_margin},
           {"final_v_norm", r.final_v_norm},
           {"guarantees", {{"sup", r.sup_ok}, {"span", r.span_ok}, {"attainment", r.attainment_ok}}},
           {"monitor",
            {{"status", std::string(wnl::to_string(mon.status))},
             {"r", mon.r},
             {"increments", mon.increments},
             {"bounds", mon.bounds}}},
           {"y", wnl::io::to_json(r.y)},
           {"Q", wnl::io::to_json(r.Q)},
           {"passed", error.empty() && r.guarantees_hold() && mon.ok()}};
  if (!error.empty()) out["error"] = error;
  return out;
}

/// Sends CSV to `path`, or to stdout when empty.
void emit_csv(const std::string& path, const std::string& csv) {
  if (path.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream out(path);
  if (!out) throw wnl::Error(wnl::ErrorCode::ParseError, "cannot write " + path);
  out << csv;
}

wnl::Polynomial load_polynomial(const std::string& path, const std::string& space_flag) {
  json j = wnl::io::read_json_file(path);
  if (!space_flag.empty()) {
    const wnl::LpSpace X = parse_space(space_flag);
    if (!j.contains("space")) {
      j["space"] = wnl::io::to_json(X);
    } else if (!(wnl::io::space_from_json(j.at("space")) == X)) {
      throw wnl::Error(wnl::ErrorCode::DimensionMismatch, "--space differs from the space in " + path);
    }
  }
  return wnl::io::polynomial_from_json(j);
}

// ---------------------------------------------------------------------------

struct Globals {
  std::uint64_t seed = wnl::OptimizerConfig{}.seed;
  wnl::OptimizerConfig cfg;
};

struct ConstantsArgs {
  int n_max = 10;
  std::string format = "json";
  std::string out;
};

int cmd_constants(const ConstantsArgs& a) {
  const wnl::ConstantsTable table(a.n_max);
  if (a.format == "csv") {
    std::string csv = "N,delta_N,s_N,s_half_N,M_N\n";
    for (const auto& r : table.rows())
      csv += std::to_string(r.N) + "," + num(r.delta_N) + "," + num(r.s_N) + "," + num(r.s_half_N) + "," + num(r.M_N) + "\n";
    emit_csv(a.out, csv);
    return kExitOk;
  }
  json rows = json::array();
  for (const auto& r : table.rows())
    rows.push_back({{"N", r.N}, {"delta_N", r.delta_N}, {"s_N", r.s_N}, {"s_half_N", r.s_half_N}, {"M_N", r.M_N}});
  std::cout << json{{"schema", "1"}, {"rows", rows}}.dump() << "\n";
  return kExitOk;
}

struct NormArgs {
  std::string poly;
  std::string space;
  std::string mode = "v";
  double s = 0.5;
};

int cmd_norm(const NormArgs& a, const Globals& g) {
  const wnl::Polynomial P = load_polynomial(a.poly, a.space);
  wnl::NormResult r = a.mode == "s"     ? wnl::s_norm(P, a.s, g.cfg)
                      : a.mode == "sup" ? wnl::sup_norm(P, g.cfg)
                                        : wnl::v_norm(P, g.cfg);
  std::cout << to_json(r).dump() << "\n";
  return kExitOk;
}

struct CounterexampleArgs {
  std::string family;
  double p = 2.0;
  int k = 2;
  double r = 0.9;
  int n_trunc = 64;
  std::string s_grid;
  int N = 8;
  int n = 4;
  std::string out;
};

int cmd_counterexample(const CounterexampleArgs& a, const Globals& g) {
  std::string csv;
  json verdict{{"schema", "1"}, {"family", a.family}};
  bool passed = false;
  if (a.family == "Pr") {
    int grid = 9;
    if (!a.s_grid.empty()) {
      const auto v = parse_list(a.s_grid);
      if (v.size() != 1 || v[0] != std::floor(v[0])) throw Usage("Pr takes --s-grid as a single count m (radii r j/m)");
      grid = static_cast<int>(v[0]);
    }
    const auto rep = wnl::verify_Pr(a.p, a.k, a.r, a.n_trunc, g.cfg, grid);
    csv = "s,numeric,exact,gap,escape_index\n";
    for (const auto& row : rep.rows)
      csv += num(row.s) + "," + num(row.numeric) + "," + num(row.exact) + "," + num(row.gap) + "," +
             std::to_string(row.escape_index) + "\n";
    verdict.update({{"p", a.p},
                    {"k", a.k},
                    {"r", a.r},
                    {"n_trunc", a.n_trunc},
                    {"s_of_N", rep.s_of_N},
                    {"hypothesis_r_ge_sN", rep.hypothesis_r_ge_sN},
                    {"clauses", {{"values", rep.clause_values}, {"escape", rep.clause_escape}, {"attainment", rep.clause_attainment}}},
                    {"v_norm", {{"value", rep.v_value}, {"s_star", rep.v_s_star}, {"margin", rep.v_margin}}},
                    {"failing_clause", rep.failing_clause()}});
    passed = rep.passed();
  } else if (a.family == "Q") {
    std::vector<double> radii{0.25, 0.5, 0.75};
    if (!a.s_grid.empty()) radii = parse_list(a.s_grid);
    const auto rep = wnl::verify_Q(a.p, a.k, a.n_trunc, g.cfg, radii);
    csv = "s,numeric,exact,gap,escape_index\n";
    for (const auto& row : rep.rows)
      csv += num(row.s) + "," + num(row.numeric) + "," + num(row.exact) + "," + num(row.gap) + "," +
             std::to_string(row.escape_index) + "\n";
    verdict.update({{"p", a.p},
                    {"k", a.k},
                    {"n_trunc", a.n_trunc},
                    {"sup_norm", {{"value", rep.sup_value}, {"index", rep.sup_index}, {"witness_distance", rep.sup_witness_distance}}},
                    {"clauses", {{"sup", rep.clause_sup}, {"escape", rep.clause_escape}, {"ball_escape", rep.clause_ball_escape}}},
                    {"v_norm", {{"value", rep.v_value}, {"escape_index", rep.ball_escape_index}}},
                    {"failing_clause", rep.failing_clause()}});
    passed = rep.passed();
  } else {
    if (a.N < 1) throw wnl::Error(wnl::ErrorCode::OutOfDomain, "fN needs --N >= 1");
    const wnl::LpSpace X(static_cast<std::size_t>(a.n), a.p);
    csv = "N,s,numeric,exact,gap,escape_index\n";
    passed = true;
    double prev = 1.0;
    for (int N = 1; N <= a.N; ++N) {
      const auto f = wnl::make_fN(wnl::Functional::coordinate(X, 0), N);
      const auto v = wnl::v_norm(f, g.cfg);
      const double exact = wnl::delta_N(N);
      const double gap = exact - v.value;
      passed = passed && std::abs(gap) <= 1e-6 && v.value < prev;
      prev = v.value;
      csv += std::to_string(N) + "," + num(v.s_star) + "," + num(v.value) + "," + num(exact) + "," + num(gap) + "," +
             std::to_string(wnl::dominant_index(v.witness)) + "\n";
    }
    verdict.update({{"p", a.p}, {"n", a.n}, {"N_max", a.N}});
  }
  verdict["passed"] = passed;
  emit_csv(a.out, csv);
  std::cout << verdict.dump() << "\n";
  return passed ? kExitOk : kExitFailed;
}

struct BollobasArgs {
  std::string poly;
  std::string x;
  std::string space;
  double eps = 0.1;
  std::string mode = "practical";
  bool normalize = false;
};

int cmd_bollobas(const BollobasArgs& a, const Globals& g) {
  wnl::Polynomial P = load_polynomial(a.poly, a.space);
  if (a.normalize) P = wnl::normalize_v(P, g.cfg).P;
  const wnl::LpSpace X = P.space();
  const wnl::LpVector x = wnl::io::vector_from_json(wnl::io::read_json_file(a.x), &X);
  const auto mode = a.mode == "faithful" ? wnl::ScheduleMode::Faithful : wnl::ScheduleMode::Practical;
  try {
    const auto res = wnl::bollobas_correct(P, x, a.eps, mode, g.cfg);
    for (const auto& st : res.steps) std::cout << to_json(st).dump() << "\n";
    const json v = verdict_json(res, "");
    std::cout << v.dump() << "\n";
    return v.at("passed").get<bool>() ? kExitOk : kExitFailed;
  } catch (const wnl::BollobasError& e) {
    for (const auto& st : e.result().steps) std::cout << to_json(st).dump() << "\n";
    std::cout << verdict_json(e.result(), e.what()).dump() << "\n";
    return kExitFailed;
  }
}

struct VerifyArgs {
  std::string filter;
};

int cmd_verify(const VerifyArgs& a, const Globals& g) {
  const auto rep = wnl::verify::run_suite(g.seed, a.filter);
  std::cout << rep.text();
  if (rep.results.empty()) {
    std::cerr << "no property matches filter '" << a.filter << "'\n";
    return kExitUsage;
  }
  return rep.ok() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted and sup norms of polynomials on complex lp spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; command-line flags override it");

  Globals g;
  if (const char* env = std::getenv("WNL_SEED")) {
    try {
      std::size_t used = 0;
      g.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::logic_error&) {
      std::cerr << "WNL_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }
  g.cfg.seed = g.seed;
  app.add_option("--seed", g.seed, "RNG seed (default: $WNL_SEED or 20240601)");
  app.add_option("--restarts", g.cfg.restarts, "random restarts per optimization")->check(CLI::NonNegativeNumber);
  app.add_option("--max-iters", g.cfg.max_iters, "iteration cap per ascent")->check(CLI::PositiveNumber);
  app.add_option("--step-tol", g.cfg.step_tol, "relative step tolerance")->check(CLI::PositiveNumber);
  app.add_option("--value-tol", g.cfg.value_tol, "agreement tolerance between restarts")->check(CLI::PositiveNumber);
  app.add_option("--s-grid-points", g.cfg.s_grid, "grid points of the outer radius search")->check(CLI::Range(3, 100000));

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "table of delta_N, s(N), s(1/2,N), M_N");
  constants->add_option("--n-max", ca.n_max, "largest degree")->check(CLI::Range(1, wnl::kMaxDegree));
  constants->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv"}));
  constants->add_option("--out", ca.out, "CSV output path");

  NormArgs na;
  auto* norm = app.add_subcommand("norm", "s-, sup- or weighted norm of a polynomial");
  norm->add_option("--poly", na.poly, "polynomial JSON file")->required();
  norm->add_option("--space", na.space, "n,p; must agree with the file when it names a space");
  norm->add_option("--mode", na.mode)->check(CLI::IsMember({"s", "sup", "v"}));
  norm->add_option("--s", na.s, "radius for --mode s");

  CounterexampleArgs xa;
  auto* counter = app.add_subcommand("counterexample", "truncated P_r, Q and f_N families");
  counter->add_option("--family", xa.family)->required()->check(CLI::IsMember({"Pr", "Q", "fN"}));
  counter->add_option("--p", xa.p);
  counter->add_option("--k", xa.k);
  counter->add_option("--r", xa.r);
  counter->add_option("--n-trunc", xa.n_trunc);
  counter->add_option("--s-grid", xa.s_grid, "Pr: count m of radii r j/m; Q: comma-separated radii");
  counter->add_option("--N", xa.N, "fN: largest degree");
  counter->add_option("--n", xa.n, "fN: dimension")->check(CLI::PositiveNumber);
  counter->add_option("--out", xa.out, "CSV output path (default: stdout before the verdict)");

  BollobasArgs ba;
  auto* bollobas = app.add_subcommand("bollobas", "iterative correction to an attaining pair");
  bollobas->add_option("--poly", ba.poly, "polynomial JSON file")->required();
  bollobas->add_option("--x", ba.x, "starting point JSON file")->required();
  bollobas->add_option("--space", ba.space, "n,p");
  bollobas->add_option("--eps", ba.eps);
  bollobas->add_option("--mode", ba.mode)->check(CLI::IsMember({"faithful", "practical"}));
  bollobas->add_flag("--normalize", ba.normalize, "rescale the polynomial to weighted norm 1 first");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--filter", va.filter, "substring of property names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  g.cfg.seed = g.seed;

  try {
    if (*constants) return cmd_constants(ca);
    if (*norm) return cmd_norm(na, g);
    if (*counter) return cmd_counterexample(xa, g);
    if (*bollobas) return cmd_bollobas(ba, g);
    if (*verify) return cmd_verify(va, g);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wnl::Error& e) {
    std::cerr << e.what() << "\n";
    return wnl::is_domain_error(e.code()) ? kExitDomain : kExitFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
