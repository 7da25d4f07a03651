#include "rankforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>

#include "rankforge/report.hpp"

namespace rankforge {

namespace {

using Clock = std::chrono::steady_clock;

struct GlobalOptions {
  bool json = true;
  std::int64_t factor_timeout_ms = kDefaultFactorBudget.count();
  std::uint64_t seed = 0;
  int precision_digits = 0;

  Budget budget() const { return Budget{factor_timeout_ms}; }
};

class StageTimer {
 public:
  explicit StageTimer(Report& report) : report_(report), start_(Clock::now()), last_(start_) {}

  void stage(const std::string& name) {
    const auto now = Clock::now();
    report_.timings.emplace_back(
        name, std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count());
    last_ = now;
  }

  void finish() {
    report_.timings.emplace_back(
        "total",
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count());
  }

 private:
  Report& report_;
  Clock::time_point start_;
  Clock::time_point last_;
};

void emit(const Report& report, const GlobalOptions& g, std::ostream& out) {
  if (g.json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.command << ":\n" << report.outputs.dump(2) << "\n";
  }
}

Normalization parse_normalization(const std::string& name) {
  if (name == "auto" || name == "x") return Normalization::x_height;
  if (name == "half") return Normalization::half_x_height;
  fail(Errc::usage, "normalization must be auto, x, or half");
}

HeightOptions height_options(const GlobalOptions& g, double tol, const std::string& norm) {
  HeightOptions opt;
  opt.tol = tol;
  opt.normalization = parse_normalization(norm);
  opt.precision_digits = g.precision_digits;
  opt.factor_budget = g.budget();
  opt.seed = g.seed;
  return opt;
}

Json diagnostics_json(const TorsionDiagnostics& d) {
  Json j;
  j["s_real"] = d.s_real;
  j["four_s2_is_square"] = d.four_s2_is_square;
  j["torsion"] = to_string(d.torsion);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rank-5 certificates for the curves y^2 = x^3 - 4S^2 x attached to "
               "A^4 + D^4 = 2(B^4 + C^4)"};
  app.name("rankforge");
  GlobalOptions g;
  app.add_flag("--json,!--no-json", g.json, "emit a JSON report (default on)");
  app.add_option("--factor-timeout-ms", g.factor_timeout_ms, "budget per factored integer")
      ->envname("RANKFORGE_FACTOR_TIMEOUT_MS");
  app.add_option("--seed", g.seed, "seed for randomized factoring");
  app.add_option("--precision-digits", g.precision_digits,
                 "working decimal digits for height computations (0 = auto)");
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "produce quartic solutions");
  solve->require_subcommand(1);
  auto* divpoly = solve->add_subcommand("divpoly", "division-polynomial parametrization");
  unsigned divpoly_n = 1;
  bool divpoly_raw = false;
  divpoly->add_option("--n", divpoly_n, "index of the multiple of (-3, 9)")->required();
  divpoly->add_flag("--raw", divpoly_raw, "skip gcd reduction and sign normalization");

  auto* descend = solve->add_subcommand("descend", "tangent-line descent on the surface");
  std::string descend_seed;
  unsigned descend_steps = 1;
  descend->add_option("--seed", descend_seed, "seed solution A,B,C,D")->required();
  descend->add_option("--steps", descend_steps, "number of descent steps")->required();

  // verify / build / torsion / certify
  auto* verify = app.add_subcommand("verify", "check A^4 + D^4 = 2(B^4 + C^4)");
  std::string verify_solution;
  verify->add_option("--solution", verify_solution, "A,B,C,D")->required();

  auto* build = app.add_subcommand("build", "build the curve and its five points");
  std::string build_solution;
  build->add_option("--solution", build_solution, "A,B,C,D")->required();

  auto* torsion_cmd = app.add_subcommand("torsion", "classify the torsion subgroup");
  std::string torsion_solution, torsion_k;
  auto* topt_solution = torsion_cmd->add_option("--solution", torsion_solution, "A,B,C,D");
  auto* topt_k = torsion_cmd->add_option("--k", torsion_k, "curve coefficient K");
  topt_solution->excludes(topt_k);

  auto* certify_cmd = app.add_subcommand("certify", "rank lower bound certificate");
  std::string certify_solution;
  double certify_tol = 1e-10;
  std::string certify_norm = "auto";
  certify_cmd->add_option("--solution", certify_solution, "A,B,C,D")->required();
  certify_cmd->add_option("--tol", certify_tol, "height tolerance (default 1e-10)");
  certify_cmd->add_option("--normalization", certify_norm, "auto, x, or half");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Report report;
  StageTimer timer(report);
  int exit_code = 0;
  try {
    if (divpoly->parsed()) {
      report.command = "solve divpoly";
      report.inputs["n"] = divpoly_n;
      report.inputs["raw"] = divpoly_raw;
      const QuarticSolution s = parametrized_solution(divpoly_n, !divpoly_raw);
      timer.stage("solve");
      report.outputs["solution"] = solution_json(s);
    } else if (descend->parsed()) {
      report.command = "solve descend";
      report.inputs["seed"] = descend_seed;
      report.inputs["steps"] = descend_steps;
      const QuarticSolution seed = parse_solution_csv(descend_seed);
      const std::vector<QuarticSolution> chain = descend_chain(seed, descend_steps);
      timer.stage("descend");
      Json solutions = Json::array();
      for (const QuarticSolution& s : chain) solutions.push_back(solution_json(s));
      report.outputs["solutions"] = solutions;
    } else if (verify->parsed()) {
      report.command = "verify";
      report.inputs["solution"] = verify_solution;
      const QuarticSolution s = parse_solution_csv(verify_solution);
      const bool ok = s.verified();
      timer.stage("verify");
      report.outputs["solution"] = solution_json(s);
      report.outputs["verified"] = ok;
      exit_code = ok ? 0 : 1;
    } else if (build->parsed()) {
      report.command = "build";
      report.inputs["solution"] = build_solution;
      const QuarticSolution s = parse_solution_csv(build_solution);
      const FamilyInstance inst = build_instance(s);
      timer.stage("build");
      report.outputs["instance"] = instance_json(inst);
      report.outputs["diagnostics"] = diagnostics_json(diagnostics(inst, g.budget(), g.seed));
      timer.stage("diagnostics");
    } else if (torsion_cmd->parsed()) {
      report.command = "torsion";
      Int k;
      if (!torsion_solution.empty()) {
        report.inputs["solution"] = torsion_solution;
        k = curve_coefficient(parse_solution_csv(torsion_solution));
      } else if (!torsion_k.empty()) {
        report.inputs["k"] = torsion_k;
        k = parse_int(torsion_k);
      } else {
        fail(Errc::usage, "torsion needs --solution or --k");
      }
      const TorsionClass t = classify(k, g.budget(), g.seed);
      timer.stage("classify");
      report.outputs["k"] = json_int(k);
      report.outputs["torsion"] = to_string(t);
    } else if (certify_cmd->parsed()) {
      report.command = "certify";
      report.inputs["solution"] = certify_solution;
      report.inputs["tol"] = certify_tol;
      report.inputs["normalization"] = certify_norm;
      const QuarticSolution s = parse_solution_csv(certify_solution);
      const FamilyInstance inst = build_instance(s);
      timer.stage("build");
      const RankCertificate cert =
          certify(inst, height_options(g, certify_tol, certify_norm));
      timer.stage("certify");
      report.outputs["instance"] = instance_json(inst);
      report.outputs["certificate"] = certificate_json(cert);
      exit_code = (cert.rank_lower_bound >= 5) ? 0 : 1;
    }
  } catch (const Error& e) {
    Json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    err << j.dump(2) << "\n";
    switch (e.code()) {
      case Errc::usage: return 2;
      case Errc::invariant_break:
      case Errc::non_integral: return 3;
      default: return 1;
    }
  }

  timer.finish();
  emit(report, g, out);
  return exit_code;
}

}  // namespace rankforge
