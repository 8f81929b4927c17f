// gitstab: command-line front end.
//
// Exit codes: 0 certified-stable (or success), 1 invalid input, 2 inconclusive,
// 3 hypotheses violated. `oracle` exits 4 when a suite finds a counterexample.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gitstab/io.hpp"
#include "gitstab/oracle_suite.hpp"
#include "gitstab/render.hpp"
#include "gitstab/scenario_gen.hpp"
#include "gitstab/sweep.hpp"

using namespace gitstab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

std::pair<i64, i64> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const i64 x = std::stoll(text);
      return {x, x};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(std::string(flag) + ": expected A:B");
  }
}

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw Error(std::string(flag) + ": " + e.what());
    }
  }
  return out;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::CertifiedStable: return 0;
    case Verdict::Inconclusive: return 2;
    case Verdict::HypothesesViolated: return 3;
  }
  return 1;
}

struct GenOptions {
  std::string kind = "example1";
  int g = 2;
  int n = 3;
  std::optional<i64> nu;
  std::optional<i64> d;
  std::optional<i64> N;
  std::string a = "4/5";
  std::string b = "1/2";
  std::string gamma = "1/2";
  std::string epsilon;
  std::uint64_t seed = 1;
  std::optional<i64> u;
  std::optional<i64> v;
};

// Replicates a single value across the n marked points.
std::vector<Rational> per_point(const std::string& text, int n, const char* flag) {
  auto xs = parse_list(text, flag);
  if (xs.size() == 1 && n != 1) xs.assign(static_cast<std::size_t>(n), xs.front());
  if (static_cast<int>(xs.size()) != n) throw Error(std::string(flag) + ": expected " + std::to_string(n) + " values");
  return xs;
}

Scenario generate(const GenOptions& o) {
  Setting st;
  const bool explicit_ctx = o.nu || o.d || o.N;
  if (o.kind == "random" && !explicit_ctx) {
    st = random_setting(o.seed);
  } else if (o.nu) {
    const auto ms = moduli_context(o.g, per_point(o.a, o.n, "--a"), *o.nu);
    st.ctx = ms.ctx;
    st.lin = ms.lin;
  } else {
    st.ctx.g = o.g;
    st.ctx.n = o.n;
    if (o.d) st.ctx.d = *o.d;
    else if (o.N) st.ctx.d = *o.N + o.g;
    else throw Error("give --nu, --d or --N");
    st.ctx.N = st.ctx.d - st.ctx.g;
    if (o.N && *o.N != st.ctx.N) throw Error("--N disagrees with --d - --g");
    st.lin.gamma = parse_rational(o.gamma);
    st.lin.b = per_point(o.b, o.n, "--b");
  }
  if (!o.epsilon.empty()) {
    st.lin.epsilon = parse_rational(o.epsilon);
  } else if (st.lin.epsilon <= 0) {
    const auto eps = default_epsilon(st.ctx, st.lin);
    st.lin.epsilon = eps ? *eps : Rational(1, 1000);
  }

  Scenario s;
  s.lin = st.lin;
  if (o.kind == "example1") {
    s.filtration = example1(st.ctx, st.lin);
    s.u = 3;
    s.v = 5;
  } else if (o.kind == "worst") {
    s.filtration = worst_candidate(st.ctx, st.lin);
  } else if (o.kind == "random") {
    s.filtration = random_admissible(st.ctx, st.lin, o.seed);
  } else {
    throw Error("unknown kind '" + o.kind + "'");
  }
  if (o.u) s.u = *o.u;
  if (o.v) s.v = *o.v;
  if (s.u < 0 || s.v < 1) throw Error("run: need u >= 0 and v >= 1");
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Mumford criterion checker for weighted filtrations of pointed curves"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, format = "svg", u_range, v_range, suite = "spans";
  std::optional<i64> run_u, run_v;
  bool find_thr = false;
  unsigned jobs = default_jobs();
  int columns = 100;
  i64 trials = 500;
  std::uint64_t seed = 1;
  GenOptions gen;

  auto* check = app.add_subcommand("check", "certify one scenario and write a JSON report");
  check->add_option("scenario", scenario_path, "scenario JSON")->required();
  check->add_option("--out", out_path, "report path (default stdout)");
  check->add_option("--u", run_u, "override run.u");
  check->add_option("--v", run_v, "override run.v");

  auto* render = app.add_subcommand("render", "draw the profile and the virtual profile");
  render->add_option("scenario", scenario_path, "scenario JSON")->required();
  render->add_option("--format", format, "svg or ascii");
  render->add_option("--out", out_path, "figure path (default stdout)");
  render->add_option("--width", columns, "ascii columns, at most 120");
  render->add_option("--u", run_u, "override run.u");
  render->add_option("--v", run_v, "override run.v");

  auto* sweep = app.add_subcommand("sweep", "certify a grid of (u, v) and write CSV");
  sweep->add_option("scenario", scenario_path, "scenario JSON")->required();
  sweep->add_option("--u-range", u_range, "A:B");
  sweep->add_option("--v-range", v_range, "A:B");
  sweep->add_flag("--find-thresholds", find_thr, "search for (u0, v0(u0)) instead of a grid");
  sweep->add_option("--jobs", jobs, "worker threads (default GITSTAB_JOBS)");
  sweep->add_option("--out", out_path, "CSV path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "run a randomized cross-check suite");
  oracle->add_option("--trials", trials, "number of trials");
  oracle->add_option("--seed", seed, "RNG seed");
  oracle->add_option("--suite", suite, "spans, identities, creep, delta or tail");

  auto* gensub = app.add_subcommand("gen", "write a scenario file");
  gensub->add_option("--kind", gen.kind, "example1, worst or random");
  gensub->add_option("--g", gen.g, "genus");
  gensub->add_option("--n", gen.n, "number of marked points");
  gensub->add_option("--nu", gen.nu, "moduli twist; sets d from g and a");
  gensub->add_option("--d", gen.d, "degree");
  gensub->add_option("--N", gen.N, "projective dimension (d - g)");
  gensub->add_option("--a", gen.a, "moduli weights, one value or a comma list");
  gensub->add_option("--b", gen.b, "linearizing weights, one value or a comma list");
  gensub->add_option("--gamma", gen.gamma, "gamma when --nu is not given");
  gensub->add_option("--epsilon", gen.epsilon, "epsilon (default derived from the case)");
  gensub->add_option("--seed", gen.seed, "seed for --kind random");
  gensub->add_option("--u", gen.u, "run.u");
  gensub->add_option("--v", gen.v, "run.v");
  gensub->add_option("--out", out_path, "scenario path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*gensub) {
      emit(out_path, scenario_to_json(generate(gen)).dump(2) + "\n");
      return 0;
    }
    if (*oracle) {
      const SuiteResult res = run_oracle_suite(suite, trials, seed);
      std::cout << "suite " << res.suite << ": " << res.trials << " trials, " << res.checks << " checks, "
                << res.failures << " failures";
      if (res.printed_mismatches) std::cout << ", " << res.printed_mismatches << " printed-form mismatches";
      std::cout << "\n";
      for (const auto& note : res.notes) std::cout << "  " << note << "\n";
      std::cout << (res.failures == 0 ? "PASS" : "FAIL") << "\n";
      return res.failures == 0 ? 0 : 4;
    }

    Scenario s = parse_scenario(slurp(scenario_path));
    if (run_u) s.u = *run_u;
    if (run_v) s.v = *run_v;

    if (*check) {
      const StabilityReport rep = certify(s.filtration, s.lin, s.u, s.v);
      nlohmann::json out = report_to_json(rep);
      const MultFiltration mf = build_tilde(s.filtration, s.u, s.v);
      out["stages"] = stages_to_json(build_xtilde(mf));
      out["vertices"] = vertices_to_json(mf);
      emit(out_path, out.dump(2) + "\n");
      return exit_code(rep.verdict);
    }
    if (*render) {
      for (const auto& v : validate(s.filtration, s.lin))
        throw Error("invalid scenario: " + (v.row >= 0 ? "row " + std::to_string(v.row) + ": " : "") + v.what);
      if (format != "svg" && format != "ascii") throw Error("unknown format '" + format + "'");
      const MultFiltration mf = build_tilde(s.filtration, s.u, s.v);
      const XTildeProfile xt = build_xtilde(mf, false);
      emit(out_path, format == "svg" ? render_svg(mf, xt) : render_ascii(mf, xt, columns));
      return 0;
    }
    if (*sweep) {
      if (jobs == 0) throw Error("--jobs must be positive");
      if (find_thr) {
        emit(out_path, thresholds_csv(find_thresholds(s.filtration, s.lin)));
        return 0;
      }
      const auto [ulo, uhi] = u_range.empty() ? std::pair<i64, i64>{s.u, s.u} : parse_range(u_range, "--u-range");
      const auto [vlo, vhi] = v_range.empty() ? std::pair<i64, i64>{s.v, s.v} : parse_range(v_range, "--v-range");
      emit(out_path, sweep_csv(s.filtration, s.lin, ulo, uhi, vlo, vhi, jobs));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "gitstab: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
