#include "hypergruss/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypergruss/scalar.hpp"

namespace hypergruss {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ln |Gamma(x)| with the sign of Gamma(x); sign 0 flags a pole.
std::pair<double, int> log_abs_gamma_signed(double x) {
  if (x > 0.0) return {log_gamma(x), 1};
  if (x == std::floor(x)) return {0.0, 0};
  const double s = std::sin(kPi * x);
  return {std::log(kPi / std::fabs(s)) - log_gamma(1.0 - x),
          s > 0.0 ? 1 : -1};
}

struct SumState {
  double value = 0.0;
  double err = 0.0;
  long terms = 0;
  bool converged = false;
  bool overflow = false;
};

// Sums t_0 + t_1 + ... with t_0 = 1 and t_{n+1} = t_n * ratio(n).  Stops once
// `consecutive_small` successive terms fall below half the relative tolerance
// scaled by the geometric tail factor (1 - r), r being the latest term ratio.
// The tail estimate |t_last| / (1 - r) then sits inside the requested
// tolerance.  Positive-term sums are checked monotone, which is exact in
// floating point because every increment is >= 0.
template <class Ratio>
SumState sum_ratio_series(Ratio&& ratio, const EvalConfig& cfg,
                          bool positive_terms) {
  SumState st;
  double term = 1.0, partial = 1.0, rhat = 0.0, max_abs = 1.0;
  int small_run = 0;
  long n = 0;
  for (; n + 1 < cfg.max_terms; ++n) {
    const double q = ratio(n);
    const double next = term * q;
    const double updated = partial + next;
    if (!std::isfinite(updated)) {
      st.overflow = true;
      break;
    }
    if (positive_terms && updated < partial)
      throw std::logic_error("sum_ratio_series: partial sums not monotone");
    term = next;
    partial = updated;
    rhat = std::min(std::fabs(q), 0.9999);
    max_abs = std::max(max_abs, std::fabs(partial));
    if (std::fabs(term) <=
        0.5 * cfg.rel_tol * (1.0 - rhat) * std::fabs(partial))
      ++small_run;
    else
      small_run = 0;
    if (small_run >= cfg.consecutive_small) {
      st.converged = true;
      ++n;
      break;
    }
  }
  st.value = partial;
  st.terms = n + 1;
  st.err = std::fabs(term) / (1.0 - rhat) + 2e-16 * max_abs;
  if (st.converged && st.err > cfg.rel_tol * std::fabs(st.value))
    st.converged = false;
  return st;
}

EvalResult from_sum(const SumState& st) {
  EvalResult r;
  r.value = st.value;
  r.err_estimate = st.err;
  r.terms_used = st.terms;
  r.method = Method::series;
  r.converged = st.converged;
  return r;
}

// Large negative argument: 1F1(b;c;z) ~ Gamma(c)/Gamma(c-b) (-z)^(-b)
// * sum_k (b)_k (b-c+1)_k / (k! (-z)^k), summed to its smallest term.  The
// e^z companion term is far below double range here and only enters the
// error budget.
EvalResult kummer_large_negative(double b, double c, double z) {
  const double X = -z;
  EvalResult r;
  r.method = Method::series;
  const auto [lcb, scb] = log_abs_gamma_signed(c - b);
  if (scb == 0) {  // Gamma(c-b) pole: leading coefficient vanishes
    r.value = 0.0;
    r.terms_used = 1;
    r.converged = true;
    return r;
  }
  const double loglead = log_gamma(c) - lcb - b * std::log(X);
  double s = 1.0, term = 1.0;
  long k = 0;
  while (k < 500) {
    const double num = (b + k) * (b - c + 1.0 + k);
    if (std::fabs(num) >= (k + 1.0) * X) break;  // terms start growing
    term *= num / ((k + 1.0) * X);
    s += term;
    ++k;
    if (std::fabs(term) < 1e-18 * std::fabs(s)) break;
  }
  const double lead = loglead < -745.0 ? 0.0 : scb * std::exp(loglead);
  r.value = lead * s;
  r.err_estimate = std::fabs(lead) * (std::fabs(term) + 1e-16 * (k + 2.0));
  const double lsec = z + log_gamma(c) - log_gamma(b) + (b - c) * std::log(X);
  if (lsec > -745.0) r.err_estimate += std::exp(lsec);
  r.terms_used = k + 1;
  r.converged = true;
  return r;
}

}  // namespace

EvalResult gauss_2f1(double a, double b, double c, double z,
                     const EvalConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw std::domain_error("gauss_2f1: parameters must be positive");
  if (!(std::fabs(z) < 1.0))
    throw std::domain_error("gauss_2f1: series needs |z| < 1");
  EvalResult r;
  r.method = Method::series;
  if (z == 0.0) {
    r.value = 1.0;
    r.terms_used = 1;
    r.converged = true;
    return r;
  }
  const auto st = sum_ratio_series(
      [=](long n) { return (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z; },
      cfg, z > 0.0);
  return from_sum(st);
}

EvalResult gauss_2f1_beta_expansion(double a, double b, double c, double z,
                                    const EvalConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > b))
    throw std::domain_error("gauss_2f1_beta_expansion: need a > 0, 0 < b < c");
  if (!(std::fabs(z) < 1.0))
    throw std::domain_error("gauss_2f1_beta_expansion: series needs |z| < 1");
  EvalResult r;
  r.method = Method::series;
  if (z == 0.0) {
    r.value = 1.0;
    r.terms_used = 1;
    r.converged = true;
    return r;
  }
  // Every term rebuilt from log-gamma: no recurrence shared with gauss_2f1,
  // which is the point of this representation.
  const double lnz = std::log(std::fabs(z));
  const double base = log_gamma(c) - log_gamma(a) - log_gamma(b);
  double partial = 0.0, max_abs = 0.0, err_round = 0.0;
  double prev = 0.0, term = 0.0, rhat = 0.0;
  int small_run = 0;
  bool converged = false;
  long n = 0;
  for (; n < cfg.max_terms; ++n) {
    const double la = log_gamma(a + n), lb = log_gamma(b + n);
    const double lc = log_gamma(c + n), lf = log_gamma(n + 1.0);
    const double lt = la + lb - lc - lf + n * lnz + base;
    term = lt < -745.0 ? 0.0 : std::exp(lt);
    if (z < 0.0 && (n & 1)) term = -term;
    partial += term;
    max_abs = std::max(max_abs, std::fabs(partial));
    const double labs =
        std::fabs(la) + std::fabs(lb) + std::fabs(lc) + std::fabs(lf) +
        std::fabs(n * lnz) + std::fabs(base);
    err_round += std::fabs(term) * 2e-16 * (labs + 2.0);
    if (n > 0 && prev != 0.0)
      rhat = std::min(std::fabs(term / prev), 0.9999);
    prev = term;
    if (n > 0 && std::fabs(term) <=
                     0.5 * cfg.rel_tol * (1.0 - rhat) * std::fabs(partial))
      ++small_run;
    else
      small_run = 0;
    if (small_run >= cfg.consecutive_small) {
      converged = true;
      ++n;
      break;
    }
  }
  r.value = partial;
  r.err_estimate = std::fabs(term) / (1.0 - rhat) + err_round;
  r.terms_used = n;
  r.converged = converged && r.err_estimate <= cfg.rel_tol * std::fabs(r.value);
  return r;
}

EvalResult kummer_1f1(double b, double c, double z, const EvalConfig& cfg) {
  if (!(b > 0.0) || !(c > 0.0))
    throw std::domain_error("kummer_1f1: parameters must be positive");
  EvalResult r;
  r.method = Method::series;
  if (z == 0.0) {
    r.value = 1.0;
    r.terms_used = 1;
    r.converged = true;
    return r;
  }
  if (b == c) {  // 1F1(b;b;z) = e^z
    r.value = std::exp(z);
    r.err_estimate = r.value * 1.2e-16 * std::max(1.0, std::fabs(z));
    r.terms_used = 1;
    r.converged = std::isfinite(r.value);
    return r;
  }
  if (z > 0.0) {
    const auto st = sum_ratio_series(
        [=](long n) { return (b + n) / ((c + n) * (n + 1.0)) * z; }, cfg,
        true);
    return from_sum(st);
  }
  if (z <= -600.0) return kummer_large_negative(b, c, z);
  if (c - b > 0.0) {
    // reflection: 1F1(b;c;z) = e^z 1F1(c-b;c;-z), all terms positive
    const double x = -z;
    const auto st = sum_ratio_series(
        [=](long n) { return (c - b + n) / ((c + n) * (n + 1.0)) * x; }, cfg,
        true);
    const double ez = std::exp(z);
    r.value = ez * st.value;
    r.err_estimate =
        ez * st.err + std::fabs(r.value) * 1.2e-16 * std::max(1.0, x);
    r.terms_used = st.terms;
    r.converged =
        st.converged && r.err_estimate <= cfg.rel_tol * std::fabs(r.value);
    return r;
  }
  // c <= b: alternating sum taken head-on; flag the cancellation
  const auto st = sum_ratio_series(
      [=](long n) { return (b + n) / ((c + n) * (n + 1.0)) * z; }, cfg, false);
  r = from_sum(st);
  r.cancellation_warning = true;
  return r;
}

namespace {

EvalResult generalized_series(const ParamSet& ps, double z,
                              const GenBetaFn& betagen, const EvalConfig& cfg,
                              bool gauss_factor) {
  if (!(ps.b > 0.0) || !(ps.c > ps.b))
    throw std::domain_error("generalized series: need 0 < b < c");
  if (gauss_factor) {
    if (!(ps.a > 0.0))
      throw std::domain_error("generalized series: need a > 0");
    if (!(std::fabs(z) < 1.0))
      throw std::domain_error("generalized series: needs |z| < 1");
  }
  const double B = beta(ps.b, ps.c - ps.b);
  EvalResult r;
  r.method = Method::series;
  double pf = 1.0;  // (a)_n z^n / n!, or z^n / n! for the confluent variant
  double partial = 0.0, err_quad = 0.0, max_abs = 0.0;
  double prev = 0.0, term = 0.0, rhat = 0.0;
  int small_run = 0;
  bool converged = false;
  long n = 0, nodes = 0;
  for (; n < cfg.max_terms; ++n) {
    // budget the inner quadrature so the summed error stays within rel_tol
    const double tol_n =
        std::max(cfg.rel_tol / (2.0 * (n + 2.0) * (n + 2.0)), 1e-15);
    const GenBetaValue gb = betagen(ps.b + n, ps.c - ps.b, tol_n);
    nodes += gb.nodes_used;
    term = pf * gb.raw / B;
    partial += term;
    err_quad += std::fabs(pf) * gb.err_estimate / B;
    max_abs = std::max(max_abs, std::fabs(partial));
    if (n > 0 && prev != 0.0)
      rhat = std::min(std::fabs(term / prev), 0.9999);
    prev = term;
    if (n > 0 && std::fabs(term) <=
                     0.5 * cfg.rel_tol * (1.0 - rhat) * std::fabs(partial))
      ++small_run;
    else
      small_run = 0;
    if (small_run >= cfg.consecutive_small) {
      converged = true;
      ++n;
      break;
    }
    pf *= (gauss_factor ? ps.a + n : 1.0) * z / (n + 1.0);
  }
  r.value = partial;
  r.err_estimate =
      std::fabs(term) / (1.0 - rhat) + err_quad + 2e-16 * max_abs;
  r.terms_used = n;
  r.converged = converged && r.err_estimate <= cfg.rel_tol * std::fabs(r.value);
  (void)nodes;
  return r;
}

}  // namespace

EvalResult gghf_series(const ParamSet& ps, double z, const GenBetaFn& betagen,
                       const EvalConfig& cfg) {
  return generalized_series(ps, z, betagen, cfg, true);
}

EvalResult gchf_series(const ParamSet& ps, double z, const GenBetaFn& betagen,
                       const EvalConfig& cfg) {
  return generalized_series(ps, z, betagen, cfg, false);
}

}  // namespace hypergruss
