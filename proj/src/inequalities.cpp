#include "hypergruss/inequalities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypergruss/scalar.hpp"
#include "hypergruss/summation.hpp"

namespace hypergruss {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

IneqReport make_report(std::string name, double lhs, double rhs,
                       double err_budget, const ParamSet& ps, ArgList args,
                       bool gating = true) {
  IneqReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.err_budget = err_budget;
  r.holds = r.slack >= 0.0;
  r.uncertain = err_budget > 0.0 && std::fabs(r.slack) <= 10.0 * err_budget;
  r.gating = gating;
  r.params = ps;
  r.args = std::move(args);
  return r;
}

void enforce(const std::optional<std::string>& gap, const CheckOptions& opt) {
  if (gap && !opt.exploratory) throw HypothesisViolation(*gap);
}

std::shared_ptr<const GenBetaEvaluator> evaluator_for(const ParamSet& ps,
                                                      const CheckOptions& opt) {
  if (opt.ev && opt.ev->alpha() == ps.alpha && opt.ev->beta() == ps.beta &&
      opt.ev->p() == ps.p)
    return opt.ev;
  return make_gen_beta_evaluator(ps.alpha, ps.beta, ps.p, opt.quad);
}

struct ValErr {
  double v = 0.0, e = 0.0;
};

// Normalized weighted beta B_p(b, c-b) / B(b, c-b).  The tolerance matches
// the n = 0 series term's, so the two integrals are computed identically and
// the ratio at z = 0 comes out exactly 1.
ValErr normalized_beta_ex(const ParamSet& ps,
                          const std::shared_ptr<const GenBetaEvaluator>& ev,
                          const CheckOptions& opt) {
  const GenBetaValue g = ev->eval(ps.b, ps.c - ps.b, opt.series.rel_tol / 8.0);
  if (!(g.raw > 0.0))
    throw ConvergenceError("normalized weighted beta is not positive");
  return {g.normalized, g.err_estimate / beta(ps.b, ps.c - ps.b)};
}

ValErr ratio_confluent_ex(const ParamSet& ps, double z,
                          const std::shared_ptr<const GenBetaEvaluator>& ev,
                          const CheckOptions& opt) {
  const EvalResult f = gchf_series(ps, z, betagen_for(ev), opt.series);
  const ValErr bn = normalized_beta_ex(ps, ev, opt);
  ValErr out;
  out.v = f.value / bn.v;
  out.e = f.err_estimate / bn.v + std::fabs(out.v) * (bn.e / bn.v);
  return out;
}

ValErr ratio_gauss_ex(const ParamSet& ps, double z,
                      const std::shared_ptr<const GenBetaEvaluator>& ev,
                      const CheckOptions& opt) {
  const EvalResult f = gghf_series(ps, z, betagen_for(ev), opt.series);
  const ValErr bn = normalized_beta_ex(ps, ev, opt);
  ValErr out;
  out.v = f.value / bn.v;
  out.e = f.err_estimate / bn.v + std::fabs(out.v) * (bn.e / bn.v);
  return out;
}

// (1-z)^(-a) - 1, accurately for small z.
double growth_gauss(double a, double z) {
  return std::expm1(-a * std::log1p(-z));
}

}  // namespace

IneqReport gruss_check(const GrussInstance& g) {
  const std::size_t n = g.x.size();
  if (n == 0 || g.y.size() != n || g.m.size() != n)
    throw std::domain_error("gruss_check: sequences empty or sizes differ");
  if (!(g.x_lo <= g.x_hi) || !(g.y_lo <= g.y_hi))
    throw std::domain_error("gruss_check: bounds out of order");
  CompensatedSum sm, sx, sy, sxy, ax, ay, axy;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(g.m[i] >= 0.0))
      throw std::domain_error("gruss_check: negative weight at index " +
                              std::to_string(i));
    if (g.x[i] < g.x_lo || g.x[i] > g.x_hi)
      throw std::domain_error("gruss_check: x outside bounds at index " +
                              std::to_string(i));
    if (g.y[i] < g.y_lo || g.y[i] > g.y_hi)
      throw std::domain_error("gruss_check: y outside bounds at index " +
                              std::to_string(i));
    sm.add(g.m[i]);
    sx.add(g.m[i] * g.x[i]);
    sy.add(g.m[i] * g.y[i]);
    sxy.add(g.m[i] * g.x[i] * g.y[i]);
    ax.add(g.m[i] * std::fabs(g.x[i]));
    ay.add(g.m[i] * std::fabs(g.y[i]));
    axy.add(g.m[i] * std::fabs(g.x[i] * g.y[i]));
  }
  const double Sm = sm.value(), Sx = sx.value(), Sy = sy.value(),
               Sxy = sxy.value();
  const double lhs = std::fabs(Sm * Sxy - Sx * Sy);
  const double rhs =
      0.25 * Sm * Sm * (g.x_hi - g.x_lo) * (g.y_hi - g.y_lo);
  const double budget =
      2.2e-16 * (Sm * axy.value() + ax.value() * ay.value() + 3.0 * rhs + lhs);
  ParamSet none{kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
  return make_report("gruss/discrete", lhs, rhs, budget, none,
                     {{"n", static_cast<double>(n)}});
}

double ratio_confluent(const ParamSet& ps, double z, const CheckOptions& opt) {
  return ratio_confluent_ex(ps, z, evaluator_for(ps, opt), opt).v;
}

double ratio_gauss(const ParamSet& ps, double z, const CheckOptions& opt) {
  return ratio_gauss_ex(ps, z, evaluator_for(ps, opt), opt).v;
}

// ---- hypothesis validators -------------------------------------------------

namespace {

std::optional<std::string> envelope_param_gap(const ParamSet& ps) {
  if (!(ps.a > 0.0)) return "a > 0";
  if (ps.a == 1.0) return "a != 1";
  if (!(ps.b >= 1.0)) return "b >= 1";
  if (!(ps.c >= ps.b + 1.0)) return "c >= b + 1";
  if (!(ps.alpha >= 1.0)) return "alpha >= 1";
  if (!(ps.beta >= ps.alpha + 1.0)) return "beta >= alpha + 1";
  if (!(ps.p > 0.0)) return "p > 0";
  return std::nullopt;
}

std::optional<std::string> kernel_param_gap(const ParamSet& ps) {
  if (!(ps.b > 0.0) || !(ps.c > ps.b)) return "0 < b < c";
  if (!(ps.alpha > 0.0)) return "alpha > 0";
  if (!(ps.beta > 0.0)) return "beta > 0";
  if (!(ps.p >= 0.0)) return "p >= 0";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> envelopes_hypothesis_gap(const ParamSet& ps,
                                                    double z, double t) {
  if (auto gap = envelope_param_gap(ps)) return gap;
  if (z == 0.0) return "z != 0";
  if (!(std::fabs(z) < 1.0)) return "|z| < 1";
  if (!(t > 0.0 && t < 1.0)) return "0 < t < 1";
  return std::nullopt;
}

std::optional<std::string> generalized_envelopes_hypothesis_gap(
    const ParamSet& ps, double z) {
  if (auto gap = envelope_param_gap(ps)) return gap;
  if (z == 0.0) return "z != 0";
  if (!(std::fabs(z) < 1.0)) return "|z| < 1";
  return std::nullopt;
}

std::optional<std::string> ratio_confluent_hypothesis_gap(const ParamSet& ps,
                                                          double z, double z0) {
  if (auto gap = kernel_param_gap(ps)) return gap;
  if (!(z > 0.0)) return "z > 0";
  if (!(z <= z0)) return "z <= z0";
  return std::nullopt;
}

std::optional<std::string> ratio_gauss_hypothesis_gap(const ParamSet& ps,
                                                      double z, double z0) {
  if (!(ps.a > 0.0)) return "a > 0";
  if (auto gap = kernel_param_gap(ps)) return gap;
  if (!(z > 0.0)) return "z > 0";
  if (!(z <= z0)) return "z <= z0";
  if (!(z0 < 1.0)) return "z0 < 1";
  return std::nullopt;
}

std::optional<std::string> shift_confluent_hypothesis_gap(const ParamSet& ps,
                                                          double z1, double z2,
                                                          double z3) {
  if (auto gap = kernel_param_gap(ps)) return gap;
  if (!(z1 >= 0.0 && z1 <= 1.0)) return "z1 in [0, 1]";
  if (!(z2 >= 0.0 && z2 <= 1.0)) return "z2 in [0, 1]";
  if (!(z3 >= 0.0)) return "z3 >= 0";
  return std::nullopt;
}

std::optional<std::string> shift_gauss_hypothesis_gap(const ParamSet& ps,
                                                      double z1, double z2,
                                                      double z3) {
  if (!(ps.a > 0.0)) return "a > 0";
  if (auto gap = kernel_param_gap(ps)) return gap;
  if (!(z1 >= 0.0 && z1 <= 1.0)) return "z1 in [0, 1]";
  if (!(z2 >= 0.0 && z2 <= 1.0)) return "z2 in [0, 1]";
  if (!(z3 >= 0.0 && z3 < 1.0)) return "z3 in [0, 1)";
  return std::nullopt;
}

// ---- checkers --------------------------------------------------------------

std::vector<IneqReport> check_envelopes(const ParamSet& ps, double z, double t,
                                        const CheckOptions& opt) {
  enforce(envelopes_hypothesis_gap(ps, z, t), opt);
  std::vector<IneqReport> out;
  // Exponents shifted by one are >= 0 under the hypotheses; clamp rounding
  // dust from c = b + offset style grids.
  const auto pos = [](double v) { return v < 0.0 ? 0.0 : v; };
  const double lam_bc = lambda_envelope(pos(ps.b - 1.0), pos(ps.c - ps.b - 1.0));
  const double B_bc = beta(ps.b, ps.c - ps.b);
  const double lam_ab =
      lambda_envelope(pos(ps.alpha - 1.0), pos(ps.beta - ps.alpha - 1.0));
  const double B_ab = beta(ps.alpha, ps.beta - ps.alpha);

  // confluent function under its endpoint envelope
  {
    const EvalResult f = kummer_1f1(ps.b, ps.c, z, opt.series);
    const double rhs = lam_bc / B_bc * std::expm1(z) / z;
    out.push_back(make_report("envelopes/confluent", f.value, rhs,
                              f.err_estimate + std::fabs(rhs) * 1e-13, ps,
                              {{"z", z}}));
  }
  // kernel at t: flat bound and the t-windowed bound
  {
    const double w = -ps.p / (t * (1.0 - t));
    const EvalResult k = kummer_1f1(ps.alpha, ps.beta, w, opt.series);
    const double flat = lam_ab / (4.0 * ps.p * B_ab);
    out.push_back(make_report("envelopes/kernel-flat", k.value, flat,
                              k.err_estimate + flat * 1e-13, ps,
                              {{"t", t}}));
    const double windowed =
        lam_ab / B_ab * (-std::expm1(w)) / ps.p * t * (1.0 - t);
    out.push_back(make_report("envelopes/kernel-windowed", k.value, windowed,
                              k.err_estimate + windowed * 1e-13, ps,
                              {{"t", t}}));
  }
  // weighted beta under the theta envelope
  {
    const auto ev = evaluator_for(ps, opt);
    const GenBetaValue gb =
        ev->eval(ps.b, ps.c - ps.b, opt.series.rel_tol / 8.0);
    const double rhs = theta_envelope(ps.b, ps.c, ps.alpha, ps.beta, ps.p);
    out.push_back(make_report("envelopes/weighted-beta", gb.raw, rhs,
                              gb.err_estimate + rhs * 1e-13, ps, {}));
    // tighter variant with the unshifted exponents b, c-b in the sup factor;
    // informational only
    const double alt =
        lambda_envelope(ps.b, ps.c - ps.b) * lam_ab / (4.0 * ps.p * B_ab);
    out.push_back(make_report("envelopes/weighted-beta-alt", gb.raw, alt,
                              gb.err_estimate + alt * 1e-13, ps, {}, false));
  }
  // Gauss function under its endpoint envelope
  {
    const EvalResult f = gauss_2f1(ps.a, ps.b, ps.c, z, opt.series);
    const double factor =
        -std::expm1((1.0 - ps.a) * std::log1p(-z)) / ((1.0 - ps.a) * z);
    const double rhs = lam_bc / B_bc * factor;
    out.push_back(make_report("envelopes/gauss", f.value, rhs,
                              f.err_estimate + std::fabs(rhs) * 1e-13, ps,
                              {{"z", z}}));
  }
  return out;
}

std::vector<IneqReport> check_generalized_envelopes(const ParamSet& ps,
                                                    double z,
                                                    const CheckOptions& opt) {
  enforce(generalized_envelopes_hypothesis_gap(ps, z), opt);
  std::vector<IneqReport> out;
  const auto ev = evaluator_for(ps, opt);
  const auto bg = betagen_for(ev);
  const double theta_factor =
      lambda_envelope(ps.alpha - 1.0, ps.beta - ps.alpha - 1.0) /
      (4.0 * ps.p * beta(ps.alpha, ps.beta - ps.alpha));
  {
    const EvalResult g = gchf_series(ps, z, bg, opt.series);
    const EvalResult f = kummer_1f1(ps.b, ps.c, z, opt.series);
    const double rhs = theta_factor * f.value;
    out.push_back(make_report(
        "generalized-envelopes/confluent", g.value, rhs,
        g.err_estimate + theta_factor * f.err_estimate + std::fabs(rhs) * 1e-13,
        ps, {{"z", z}}));
  }
  {
    const EvalResult g = gghf_series(ps, z, bg, opt.series);
    const EvalResult f = gauss_2f1(ps.a, ps.b, ps.c, z, opt.series);
    const double rhs = theta_factor * f.value;
    out.push_back(make_report(
        "generalized-envelopes/gauss", g.value, rhs,
        g.err_estimate + theta_factor * f.err_estimate + std::fabs(rhs) * 1e-13,
        ps, {{"z", z}}));
  }
  return out;
}

std::vector<IneqReport> check_ratio_confluent(const ParamSet& ps, double z,
                                              double z0,
                                              const CheckOptions& opt) {
  enforce(ratio_confluent_hypothesis_gap(ps, z, z0), opt);
  const auto ev = evaluator_for(ps, opt);
  const ValErr r = ratio_confluent_ex(ps, z, ev, opt);
  const ValErr r0 = ratio_confluent_ex(ps, z0, ev, opt);
  std::vector<IneqReport> out;
  const ArgList args{{"z", z}, {"z0", z0}};
  {
    const double g0 = std::expm1(z0), g = std::expm1(z);
    const double lhs = std::fabs(g0 * (r.v - 1.0) - g * (r0.v - 1.0));
    const double rhs = 0.25 * g0 * g0 * (z / z0);
    const double budget = g0 * r.e + g * r0.e +
                          1e-15 * (g0 * std::fabs(r.v - 1.0) +
                                   g * std::fabs(r0.v - 1.0) + rhs);
    out.push_back(
        make_report("ratio-confluent/centered", lhs, rhs, budget, ps, args));
  }
  {
    const double shift = std::exp(z - z0);
    const double lhs = std::fabs(r.v - shift * r0.v);
    const double rhs = 0.25 * std::exp(z0);
    const double budget =
        r.e + shift * r0.e +
        1e-15 * (std::fabs(r.v) + shift * std::fabs(r0.v) + rhs);
    out.push_back(
        make_report("ratio-confluent/exp-shift", lhs, rhs, budget, ps, args));
  }
  return out;
}

std::vector<IneqReport> check_ratio_gauss(const ParamSet& ps, double z,
                                          double z0, const CheckOptions& opt) {
  enforce(ratio_gauss_hypothesis_gap(ps, z, z0), opt);
  const auto ev = evaluator_for(ps, opt);
  const ValErr r = ratio_gauss_ex(ps, z, ev, opt);
  const ValErr r0 = ratio_gauss_ex(ps, z0, ev, opt);
  std::vector<IneqReport> out;
  const ArgList args{{"z", z}, {"z0", z0}};
  {
    const double g0 = growth_gauss(ps.a, z0), g = growth_gauss(ps.a, z);
    const double lhs = std::fabs(g0 * (r.v - 1.0) - g * (r0.v - 1.0));
    const double rhs = 0.25 * g0 * g0 * (z / z0);
    const double budget = g0 * r.e + g * r0.e +
                          1e-15 * (g0 * std::fabs(r.v - 1.0) +
                                   g * std::fabs(r0.v - 1.0) + rhs);
    out.push_back(
        make_report("ratio-gauss/centered", lhs, rhs, budget, ps, args));
    // tighter variant with z/4 in place of z/(4 z0); informational only
    out.push_back(make_report("ratio-gauss/centered-alt", lhs,
                              0.25 * g0 * g0 * z, budget, ps, args, false));
  }
  {
    const double wa = std::pow(1.0 - z, ps.a), wa0 = std::pow(1.0 - z0, ps.a);
    const double lhs = std::fabs(wa * r.v - wa0 * r0.v);
    const double rhs = 0.25 * (wa / wa0);
    const double budget =
        wa * r.e + wa0 * r0.e +
        1e-15 * (wa * std::fabs(r.v) + wa0 * std::fabs(r0.v) + rhs);
    out.push_back(
        make_report("ratio-gauss/scaled", lhs, rhs, budget, ps, args));
    // tighter variant carrying an extra factor z; informational only
    out.push_back(make_report("ratio-gauss/scaled-alt", lhs, rhs * z, budget,
                              ps, args, false));
  }
  return out;
}

std::vector<IneqReport> check_shift_confluent(const ParamSet& ps, double z1,
                                              double z2, double z3,
                                              const CheckOptions& opt) {
  enforce(shift_confluent_hypothesis_gap(ps, z1, z2, z3), opt);
  const auto ev = evaluator_for(ps, opt);
  const auto bg = betagen_for(ev);
  const EvalResult fa = gchf_series(ps, z1 * z2 * z3, bg, opt.series);
  const EvalResult fb = gchf_series(ps, z1 * z3, bg, opt.series);
  const ValErr bn = normalized_beta_ex(ps, ev, opt);
  const double shift = std::exp((z2 - 1.0) * z3);
  const double lhs = std::fabs(fa.value - shift * fb.value);
  const double rhs = 0.25 * std::exp(z3) * bn.v;
  const double budget =
      fa.err_estimate + shift * fb.err_estimate + 0.25 * std::exp(z3) * bn.e +
      1e-15 * (std::fabs(fa.value) + shift * std::fabs(fb.value) + rhs);
  return {make_report("shift-confluent", lhs, rhs, budget, ps,
                      {{"z1", z1}, {"z2", z2}, {"z3", z3}})};
}

std::vector<IneqReport> check_shift_gauss(const ParamSet& ps, double z1,
                                          double z2, double z3,
                                          const CheckOptions& opt) {
  enforce(shift_gauss_hypothesis_gap(ps, z1, z2, z3), opt);
  const auto ev = evaluator_for(ps, opt);
  const auto bg = betagen_for(ev);
  const EvalResult fa = gghf_series(ps, z1 * z2 * z3, bg, opt.series);
  const EvalResult fb = gghf_series(ps, z1 * z3, bg, opt.series);
  const ValErr bn = normalized_beta_ex(ps, ev, opt);
  const double wa = std::pow(1.0 - z2 * z3, ps.a);
  const double wb = std::pow(1.0 - z3, ps.a);
  const double lhs = std::fabs(wa * fa.value - wb * fb.value);
  const double rhs = 0.25 * (wa / wb) * bn.v;
  const double budget =
      wa * fa.err_estimate + wb * fb.err_estimate + 0.25 * (wa / wb) * bn.e +
      1e-15 * (wa * std::fabs(fa.value) + wb * std::fabs(fb.value) + rhs);
  return {make_report("shift-gauss", lhs, rhs, budget, ps,
                      {{"z1", z1}, {"z2", z2}, {"z3", z3}})};
}

// ---- classical (p = 0) limits ----------------------------------------------

const char* classical_limit_name(ClassicalLimit which) {
  switch (which) {
    case ClassicalLimit::ratio_confluent:
      return "ratio-confluent";
    case ClassicalLimit::ratio_gauss:
      return "ratio-gauss";
    case ClassicalLimit::shift_confluent:
      return "shift-confluent";
    case ClassicalLimit::shift_gauss:
      return "shift-gauss";
  }
  return "?";
}

std::optional<ClassicalLimit> classical_limit_from_name(const std::string& s) {
  if (s == "ratio-confluent") return ClassicalLimit::ratio_confluent;
  if (s == "ratio-gauss") return ClassicalLimit::ratio_gauss;
  if (s == "shift-confluent") return ClassicalLimit::shift_confluent;
  if (s == "shift-gauss") return ClassicalLimit::shift_gauss;
  return std::nullopt;
}

std::optional<std::string> classical_limit_hypothesis_gap(ClassicalLimit which,
                                                          const ParamSet& ps,
                                                          double u1, double u2,
                                                          double u3) {
  if (!(ps.b > 0.0) || !(ps.c > ps.b)) return "0 < b < c";
  switch (which) {
    case ClassicalLimit::ratio_confluent:
      if (!(u1 > 0.0)) return "z > 0";
      if (!(u1 <= u2)) return "z <= z0";
      return std::nullopt;
    case ClassicalLimit::ratio_gauss:
      if (!(ps.a > 0.0)) return "a > 0";
      if (!(u1 > 0.0)) return "z > 0";
      if (!(u1 <= u2)) return "z <= z0";
      if (!(u2 < 1.0)) return "z0 < 1";
      return std::nullopt;
    case ClassicalLimit::shift_confluent:
      if (!(u1 >= 0.0 && u1 <= 1.0)) return "z1 in [0, 1]";
      if (!(u2 >= 0.0 && u2 <= 1.0)) return "z2 in [0, 1]";
      if (!(u3 >= 0.0)) return "z3 >= 0";
      return std::nullopt;
    case ClassicalLimit::shift_gauss:
      if (!(ps.a > 0.0)) return "a > 0";
      if (!(u1 >= 0.0 && u1 <= 1.0)) return "z1 in [0, 1]";
      if (!(u2 >= 0.0 && u2 <= 1.0)) return "z2 in [0, 1]";
      if (!(u3 >= 0.0 && u3 < 1.0)) return "z3 in [0, 1)";
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<IneqReport> check_classical_limit(ClassicalLimit which,
                                              const ParamSet& ps, double u1,
                                              double u2, double u3,
                                              const CheckOptions& opt) {
  enforce(classical_limit_hypothesis_gap(which, ps, u1, u2, u3), opt);
  std::vector<IneqReport> out;
  const std::string prefix =
      std::string("classical/") + classical_limit_name(which);
  switch (which) {
    case ClassicalLimit::ratio_confluent: {
      const double z = u1, z0 = u2;
      const EvalResult f = kummer_1f1(ps.b, ps.c, z, opt.series);
      const EvalResult f0 = kummer_1f1(ps.b, ps.c, z0, opt.series);
      const ArgList args{{"z", z}, {"z0", z0}};
      {
        const double g0 = std::expm1(z0), g = std::expm1(z);
        const double lhs =
            std::fabs(g0 * (f.value - 1.0) - g * (f0.value - 1.0));
        const double rhs = 0.25 * g0 * g0 * (z / z0);
        const double budget = g0 * f.err_estimate + g * f0.err_estimate +
                              1e-15 * (g0 * std::fabs(f.value - 1.0) +
                                       g * std::fabs(f0.value - 1.0) + rhs);
        out.push_back(make_report(prefix + "/centered", lhs, rhs, budget, ps,
                                  args));
      }
      {
        const double shift = std::exp(z - z0);
        const double lhs = std::fabs(f.value - shift * f0.value);
        const double rhs = 0.25 * std::exp(z0);
        const double budget =
            f.err_estimate + shift * f0.err_estimate +
            1e-15 * (std::fabs(f.value) + shift * std::fabs(f0.value) + rhs);
        out.push_back(make_report(prefix + "/exp-shift", lhs, rhs, budget, ps,
                                  args));
      }
      break;
    }
    case ClassicalLimit::ratio_gauss: {
      const double z = u1, z0 = u2;
      const EvalResult f = gauss_2f1(ps.a, ps.b, ps.c, z, opt.series);
      const EvalResult f0 = gauss_2f1(ps.a, ps.b, ps.c, z0, opt.series);
      const ArgList args{{"z", z}, {"z0", z0}};
      {
        const double g0 = growth_gauss(ps.a, z0), g = growth_gauss(ps.a, z);
        const double lhs =
            std::fabs(g0 * (f.value - 1.0) - g * (f0.value - 1.0));
        const double rhs = 0.25 * g0 * g0 * (z / z0);
        const double budget = g0 * f.err_estimate + g * f0.err_estimate +
                              1e-15 * (g0 * std::fabs(f.value - 1.0) +
                                       g * std::fabs(f0.value - 1.0) + rhs);
        out.push_back(
            make_report(prefix + "/centered", lhs, rhs, budget, ps, args));
        out.push_back(make_report(prefix + "/centered-alt", lhs,
                                  0.25 * g0 * g0 * z, budget, ps, args,
                                  false));
      }
      {
        const double wa = std::pow(1.0 - z, ps.a);
        const double wa0 = std::pow(1.0 - z0, ps.a);
        const double lhs = std::fabs(wa * f.value - wa0 * f0.value);
        const double rhs = 0.25 * (wa / wa0);
        const double budget =
            wa * f.err_estimate + wa0 * f0.err_estimate +
            1e-15 * (wa * std::fabs(f.value) + wa0 * std::fabs(f0.value) +
                     rhs);
        out.push_back(
            make_report(prefix + "/scaled", lhs, rhs, budget, ps, args));
        out.push_back(make_report(prefix + "/scaled-alt", lhs, rhs * z, budget,
                                  ps, args, false));
      }
      break;
    }
    case ClassicalLimit::shift_confluent: {
      const double z1 = u1, z2 = u2, z3 = u3;
      const EvalResult fa = kummer_1f1(ps.b, ps.c, z1 * z2 * z3, opt.series);
      const EvalResult fb = kummer_1f1(ps.b, ps.c, z1 * z3, opt.series);
      const ArgList args{{"z1", z1}, {"z2", z2}, {"z3", z3}};
      const double rhs = 0.25 * std::exp(z3);
      {
        const double shift = std::exp((z2 - 1.0) * z3);
        const double lhs = std::fabs(fa.value - shift * fb.value);
        const double budget =
            fa.err_estimate + shift * fb.err_estimate +
            1e-15 * (std::fabs(fa.value) + shift * std::fabs(fb.value) + rhs);
        out.push_back(
            make_report(prefix + "/exp-shift", lhs, rhs, budget, ps, args));
      }
      {
        // variant with the shift driven by z1 instead of z2; informational
        const double shift = std::exp((z1 - 1.0) * z3);
        const double lhs = std::fabs(fa.value - shift * fb.value);
        const double budget =
            fa.err_estimate + shift * fb.err_estimate +
            1e-15 * (std::fabs(fa.value) + shift * std::fabs(fb.value) + rhs);
        out.push_back(make_report(prefix + "/exp-shift-alt", lhs, rhs, budget,
                                  ps, args, false));
      }
      break;
    }
    case ClassicalLimit::shift_gauss: {
      const double z1 = u1, z2 = u2, z3 = u3;
      const EvalResult fa =
          gauss_2f1(ps.a, ps.b, ps.c, z1 * z2 * z3, opt.series);
      const EvalResult fb = gauss_2f1(ps.a, ps.b, ps.c, z1 * z3, opt.series);
      const double wa = std::pow(1.0 - z2 * z3, ps.a);
      const double wb = std::pow(1.0 - z3, ps.a);
      const double lhs = std::fabs(wa * fa.value - wb * fb.value);
      const double rhs = 0.25 * (wa / wb);
      const double budget =
          wa * fa.err_estimate + wb * fb.err_estimate +
          1e-15 * (wa * std::fabs(fa.value) + wb * std::fabs(fb.value) + rhs);
      out.push_back(make_report(prefix + "/power-shift", lhs, rhs, budget, ps,
                                {{"z1", z1}, {"z2", z2}, {"z3", z3}}));
      break;
    }
  }
  return out;
}

}  // namespace hypergruss
