#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hypergruss/golden.hpp"
#include "hypergruss/inequalities.hpp"
#include "hypergruss/quadrature.hpp"
#include "hypergruss/series.hpp"
#include "hypergruss/sweep.hpp"

namespace {

using namespace hypergruss;

void print_eval(const char* label, const EvalResult& r) {
  std::cout << label << ":\n"
            << "  value        = " << format_double(r.value) << '\n'
            << "  err_estimate = " << format_double(r.err_estimate) << '\n'
            << "  " << (r.method == Method::series ? "terms" : "nodes")
            << "        = " << r.terms_used << '\n'
            << "  converged    = " << (r.converged ? "true" : "false") << '\n';
  if (r.cancellation_warning)
    std::cout << "  warning      = heavy cancellation, accuracy reduced\n";
}

struct EvalArgs {
  std::string fn;
  double a = 1.0, b = 1.0, c = 2.0, alpha = 1.0, beta = 2.0, p = 1.0;
  double x = 1.0, y = 1.0, z = 0.5;
  std::string method = "series";
  double rel_tol = 1e-12;
};

int run_eval(const EvalArgs& e) {
  EvalConfig cfg;
  cfg.rel_tol = e.rel_tol;
  QuadConfig qcfg;
  qcfg.rel_tol = std::max(e.rel_tol, 1e-15);
  const ParamSet ps{e.a, e.b, e.c, e.alpha, e.beta, e.p};

  if (e.fn == "genbeta") {
    const GenBetaValue g = gen_beta(e.x, e.y, e.alpha, e.beta, e.p, qcfg);
    std::cout << "raw          = " << format_double(g.raw) << '\n'
              << "normalized   = " << format_double(g.normalized) << '\n'
              << "err_estimate = " << format_double(g.err_estimate) << '\n'
              << "nodes        = " << g.nodes_used << '\n';
    return 0;
  }

  const bool want_series = e.method == "series" || e.method == "both";
  const bool want_integral = e.method == "integral" || e.method == "both";
  if (e.fn == "2f1-beta" && want_integral)
    throw std::domain_error("2f1-beta has no integral form; use --method series");

  EvalResult rs, ri;
  bool have_series = false, have_integral = false;
  if (e.fn == "2f1") {
    if (want_series) rs = gauss_2f1(e.a, e.b, e.c, e.z, cfg);
    if (want_integral) ri = gauss_2f1_integral(e.a, e.b, e.c, e.z, qcfg);
  } else if (e.fn == "2f1-beta") {
    rs = gauss_2f1_beta_expansion(e.a, e.b, e.c, e.z, cfg);
  } else if (e.fn == "1f1") {
    if (want_series) rs = kummer_1f1(e.b, e.c, e.z, cfg);
    if (want_integral) ri = kummer_1f1_integral(e.b, e.c, e.z, qcfg);
  } else if (e.fn == "gghf") {
    if (want_series) {
      auto ev = make_gen_beta_evaluator(e.alpha, e.beta, e.p, qcfg);
      rs = gghf_series(ps, e.z, betagen_for(ev), cfg);
    }
    if (want_integral) ri = gghf_integral(ps, e.z, qcfg);
  } else if (e.fn == "gchf") {
    if (want_series) {
      auto ev = make_gen_beta_evaluator(e.alpha, e.beta, e.p, qcfg);
      rs = gchf_series(ps, e.z, betagen_for(ev), cfg);
    }
    if (want_integral) ri = gchf_integral(ps, e.z, qcfg);
  } else {
    throw std::domain_error("unknown function '" + e.fn + "'");
  }
  have_series = want_series || e.fn == "2f1-beta";
  have_integral = want_integral && e.fn != "2f1-beta";

  if (have_series) print_eval("series", rs);
  if (have_integral) print_eval("integral", ri);
  if (have_series && have_integral) {
    const double diff = std::fabs(rs.value - ri.value);
    std::cout << "difference   = " << format_double(diff)
              << " (combined budget "
              << format_double(rs.err_estimate + ri.err_estimate) << ")\n";
  }
  const bool ok = (!have_series || rs.converged) &&
                  (!have_integral || ri.converged);
  return ok ? 0 : 3;
}

struct CheckArgs {
  std::string checker;
  std::string a, b, c_offset, alpha, beta_offset, p, z, z0, z1, z2, z3, t_grid;
  std::string which = "ratio-confluent";
  std::string output, format = "json";
  unsigned long long seed = 20240817;
  int trials = 1000, max_n = 200, threads = 0;
  bool exploratory = false;
  double rel_tol = 1e-10;
};

int run_check(const CheckArgs& c) {
  SweepSpec spec;
  const auto id = checker_from_name(c.checker);
  if (!id) throw std::domain_error("unknown checker '" + c.checker + "'");
  spec.checker = *id;
  if (spec.checker == CheckerId::classical) {
    const auto wk = classical_limit_from_name(c.which);
    if (!wk) throw std::domain_error("unknown classical kind '" + c.which + "'");
    spec.which = *wk;
  }
  auto maybe = [](const std::string& text, GridAxis& ax) {
    if (!text.empty()) ax = parse_axis(text);
  };
  maybe(c.a, spec.a);
  maybe(c.b, spec.b);
  maybe(c.c_offset, spec.c_offset);
  maybe(c.alpha, spec.alpha);
  maybe(c.beta_offset, spec.beta_offset);
  maybe(c.p, spec.p);
  maybe(c.z, spec.z);
  maybe(c.z0, spec.z0);
  maybe(c.z1, spec.z1);
  maybe(c.z2, spec.z2);
  maybe(c.z3, spec.z3);
  maybe(c.t_grid, spec.t_grid);
  spec.seed = c.seed;
  spec.trials = c.trials;
  spec.max_n = c.max_n;
  spec.opts.exploratory = c.exploratory;
  spec.opts.series.rel_tol = c.rel_tol;

  const SweepSummary sum = run_sweep(spec, c.threads);
  print_summary(std::cout, sum);

  if (!c.output.empty()) {
    std::ofstream out(c.output);
    if (!out) throw std::runtime_error("cannot open for writing: " + c.output);
    if (c.format == "csv")
      write_reports_csv(out, sum);
    else
      write_reports_ndjson(out, sum);
    if (!out.good())
      throw std::runtime_error("write failed: " + c.output);
  }
  if (c.exploratory) return 0;
  return sum.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergruss: weighted hypergeometric functions and their "
               "inequality certificates"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a single function");
  eval->add_option("function", ea.fn, "2f1|2f1-beta|1f1|gghf|gchf|genbeta")
      ->required();
  eval->add_option("--a", ea.a, "first upper parameter");
  eval->add_option("--b", ea.b, "integral/series parameter b");
  eval->add_option("--c", ea.c, "denominator parameter c");
  eval->add_option("--alpha", ea.alpha, "kernel parameter alpha");
  eval->add_option("--beta", ea.beta, "kernel parameter beta");
  eval->add_option("--p", ea.p, "kernel strength p");
  eval->add_option("--x", ea.x, "weighted beta argument x");
  eval->add_option("--y", ea.y, "weighted beta argument y");
  eval->add_option("--z", ea.z, "function argument");
  eval->add_option("--method", ea.method, "series|integral|both")
      ->check(CLI::IsMember({"series", "integral", "both"}));
  eval->add_option("--rel-tol", ea.rel_tol, "relative tolerance");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "sweep an inequality family");
  check
      ->add_option("checker", ca.checker,
                   "envelopes|generalized-envelopes|ratio-confluent|"
                   "ratio-gauss|shift-confluent|shift-gauss|classical|"
                   "gruss-random")
      ->required();
  check->add_option("--a", ca.a, "grid for a (value or lo:hi:steps)");
  check->add_option("--b", ca.b, "grid for b");
  check->add_option("--c-offset", ca.c_offset, "grid for c - b");
  check->add_option("--alpha", ca.alpha, "grid for alpha");
  check->add_option("--beta-offset", ca.beta_offset, "grid for beta - alpha");
  check->add_option("--p", ca.p, "grid for p");
  check->add_option("--z", ca.z, "grid for z");
  check->add_option("--z0", ca.z0, "grid for z0");
  check->add_option("--z1", ca.z1, "grid for z1");
  check->add_option("--z2", ca.z2, "grid for z2");
  check->add_option("--z3", ca.z3, "grid for z3");
  check->add_option("--t-grid", ca.t_grid, "kernel probe grid (lo:hi:steps)");
  check->add_option("--which", ca.which,
                    "classical kind: ratio-confluent|ratio-gauss|"
                    "shift-confluent|shift-gauss");
  check->add_option("--seed", ca.seed, "random seed (gruss-random)");
  check->add_option("--trials", ca.trials, "random trials (gruss-random)");
  check->add_option("--max-n", ca.max_n, "longest random sequence");
  check->add_option("--threads", ca.threads, "worker threads (0 = auto)");
  check->add_option("--output", ca.output, "write per-report records here");
  check->add_option("--format", ca.format, "json (NDJSON) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  check->add_flag("--exploratory", ca.exploratory,
                  "evaluate outside the hypotheses; failures don't set the "
                  "exit code");
  check->add_option("--rel-tol", ca.rel_tol, "inner evaluation tolerance");

  std::string golden_file;
  auto* golden = app.add_subcommand("golden", "reference value maintenance");
  golden->require_subcommand(1);
  auto* mint = golden->add_subcommand("mint", "compute and write the records");
  mint->add_option("--file", golden_file, "output path")->required();
  auto* verify =
      golden->add_subcommand("verify", "recompute and compare the records");
  verify->add_option("--file", golden_file, "input path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return run_eval(ea);
    if (*check) return run_check(ca);
    if (*mint) return mint_golden_file(golden_file);
    if (*verify) return verify_golden_file(golden_file);
  } catch (const hypergruss::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
