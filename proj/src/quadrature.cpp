#include "hypergruss/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hypergruss/scalar.hpp"
#include "hypergruss/series.hpp"

namespace hypergruss {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// Fixed tanh-sinh node ladder: u_k = k * kHmin for |k| <= kHalfNodes, with
// level L using every 2^(kTableLevel - L)-th node.  All integrals share the
// table, which is what lets kernel values be cached per node id.  |u| tops
// out at 6.0, where 1 - t ~ 1e-276 is still a normal double.
constexpr int kTableLevel = 13;
constexpr long kHalfNodes = 4096;
constexpr double kHmin = 12.0 / 8192.0;

struct NodeRow {
  double t, omt, w, ln_t, ln_omt;
};

const NodeRow* node_table() {
  static const std::array<NodeRow, kHalfNodes + 1> table = [] {
    std::array<NodeRow, kHalfNodes + 1> tb{};
    for (long k = 0; k <= kHalfNodes; ++k) {
      const double u = k * kHmin;
      const double g = kHalfPi * std::sinh(u);
      const double e = std::exp(-2.0 * g);  // (1-t)/t on the u >= 0 side
      const double t = 1.0 / (1.0 + e);
      tb[k].t = t;
      tb[k].omt = e * t;
      tb[k].w = kPi * std::cosh(u) * t * (e * t);
      tb[k].ln_t = -std::log1p(e);
      tb[k].ln_omt = -2.0 * g - std::log1p(e);
    }
    return tb;
  }();
  return table.data();
}

// Truncation point for one side: far enough out that the factor t^s (resp.
// (1-t)^s) has decayed to ~1e-18 of its scale, i.e. 2 g(u) (1+s) >= 41.5.
double side_u_limit(double s) {
  const double g = 20.75 / (1.0 + s);
  return std::clamp(std::asinh(2.0 * g / kPi), 0.5, 6.0);
}

struct PairVal {
  double v, e;
};

using NodeFn =
    std::function<PairVal(long id, double t, double omt, double ln_t,
                          double ln_omt)>;

// Level-doubling trapezoid engine over the shared ladder.  Sums a value
// integrand and an attached error integrand with the same weights; err_second
// receives the latter's final value.
QuadResult engine(const NodeFn& f, double sx, double sy, const QuadConfig& cfg,
                  double* err_second) {
  if (!(sx > -1.0) || !(sy > -1.0))
    throw std::domain_error("integrate01: singularity exponents must be > -1");
  if (cfg.base_level < 1 || cfg.max_level > kTableLevel ||
      cfg.base_level > cfg.max_level)
    throw std::domain_error("integrate01: bad level range");
  const NodeRow* tb = node_table();
  const long kneg = std::clamp<long>(
      static_cast<long>(std::floor(side_u_limit(sx) / kHmin)), 1, kHalfNodes);
  const long kpos = std::clamp<long>(
      static_cast<long>(std::floor(side_u_limit(sy) / kHmin)), 1, kHalfNodes);

  QuadResult qr;
  double V = 0.0, E = 0.0, A = 0.0;
  double diff = std::numeric_limits<double>::infinity();
  for (int L = cfg.base_level; L <= cfg.max_level; ++L) {
    const long stride = 1L << (kTableLevel - L);
    const double h = kHmin * stride;
    double vs = 0.0, es = 0.0, as = 0.0;
    auto visit = [&](long k) {
      const NodeRow& row = tb[k < 0 ? -k : k];
      const bool flip = k < 0;
      const double t = flip ? row.omt : row.t;
      const double omt = flip ? row.t : row.omt;
      const PairVal pv = f(k, t, omt, flip ? row.ln_omt : row.ln_t,
                           flip ? row.ln_t : row.ln_omt);
      if (!std::isfinite(pv.v))
        throw std::domain_error("integrate01: non-finite integrand at t = " +
                                std::to_string(t));
      vs += row.w * pv.v;
      es += row.w * pv.e;
      as += row.w * std::fabs(pv.v);
      ++qr.nodes_used;
    };
    if (L == cfg.base_level) {
      for (long j = -(kneg / stride); j <= kpos / stride; ++j)
        visit(j * stride);
      V = h * vs;
      E = h * es;
      A = h * as;
    } else {
      for (long k = stride; k <= kpos; k += 2 * stride) visit(k);
      for (long k = -stride; k >= -kneg; k -= 2 * stride) visit(k);
      const double Vn = 0.5 * V + h * vs;
      E = 0.5 * E + h * es;
      A = 0.5 * A + h * as;
      diff = std::fabs(Vn - V);
      V = Vn;
      qr.level_used = L;
      if (diff <= cfg.rel_tol * std::fabs(V)) {
        qr.converged = true;
        break;
      }
    }
    qr.level_used = L;
  }
  qr.value = V;
  qr.err_estimate =
      (std::isfinite(diff) ? diff : std::fabs(V)) + 1e-16 * A;
  *err_second = E;
  return qr;
}

}  // namespace

QuadResult integrate01(const std::function<double(double, double)>& f,
                       std::pair<double, double> sing, const QuadConfig& cfg) {
  double second = 0.0;
  return engine(
      [&](long, double t, double omt, double, double) -> PairVal {
        return {f(t, omt), 0.0};
      },
      sing.first, sing.second, cfg, &second);
}

GenBetaEvaluator::GenBetaEvaluator(double alpha, double beta, double p,
                                   QuadConfig cfg)
    : alpha_(alpha), beta_(beta), p_(p), cfg_(cfg) {
  if (!(alpha_ > 0.0) || !(beta_ > 0.0))
    throw std::domain_error("GenBetaEvaluator: need alpha > 0, beta > 0");
  if (!(p_ >= 0.0)) throw std::domain_error("GenBetaEvaluator: need p >= 0");
  if (p_ > 0.0) {
    const long n = 2 * kHalfNodes + 1;
    kv_ = std::make_unique<std::atomic<double>[]>(n);
    ke_ = std::make_unique<std::atomic<double>[]>(n);
    for (long i = 0; i < n; ++i) {
      kv_[i].store(std::numeric_limits<double>::quiet_NaN(),
                   std::memory_order_relaxed);
      ke_[i].store(0.0, std::memory_order_relaxed);
    }
  }
}

double GenBetaEvaluator::kernel_value(double t, double one_minus_t) const {
  if (p_ == 0.0) return 1.0;
  EvalConfig kcfg;
  kcfg.rel_tol = 1e-13;
  return kummer_1f1(alpha_, beta_, -p_ / (t * one_minus_t), kcfg).value;
}

double GenBetaEvaluator::kernel_at(long node_id, double t, double omt,
                                   double* abs_err) const {
  if (p_ == 0.0) {
    *abs_err = 0.0;
    return 1.0;
  }
  const long idx = node_id + kHalfNodes;
  double v = kv_[idx].load(std::memory_order_acquire);
  if (!std::isnan(v)) {
    *abs_err = ke_[idx].load(std::memory_order_relaxed);
    return v;
  }
  EvalConfig kcfg;
  kcfg.rel_tol = 1e-13;
  const EvalResult k = kummer_1f1(alpha_, beta_, -p_ / (t * omt), kcfg);
  // error slot first, value slot second: the value doubles as ready flag
  ke_[idx].store(k.err_estimate, std::memory_order_relaxed);
  kv_[idx].store(k.value, std::memory_order_release);
  *abs_err = k.err_estimate;
  return k.value;
}

GenBetaValue GenBetaEvaluator::eval(double x, double y, double rel_tol) const {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("GenBetaEvaluator: need x > 0, y > 0");
  GenBetaValue out;
  const double B = hypergruss::beta(x, y);
  if (p_ == 0.0) {  // kernel is identically 1
    out.raw = B;
    out.normalized = 1.0;
    out.err_estimate = B * 1e-14;
    return out;
  }
  QuadConfig qc = cfg_;
  qc.rel_tol = std::max(rel_tol, 1e-15);
  double kerr_int = 0.0;
  const QuadResult qr = engine(
      [&](long id, double t, double omt, double lnt, double lnomt) -> PairVal {
        double ke = 0.0;
        const double kv = kernel_at(id, t, omt, &ke);
        const double bf = std::exp((x - 1.0) * lnt + (y - 1.0) * lnomt);
        return {bf * kv, bf * ke};
      },
      x - 1.0, y - 1.0, qc, &kerr_int);
  out.raw = qr.value;
  out.normalized = qr.value / B;
  out.err_estimate = qr.err_estimate + kerr_int + std::fabs(qr.value) * 1e-14;
  out.nodes_used = qr.nodes_used;
  return out;
}

GenBetaValue gen_beta(double x, double y, double alpha, double beta, double p,
                      const QuadConfig& cfg) {
  return GenBetaEvaluator(alpha, beta, p, cfg).eval(x, y, cfg.rel_tol);
}

namespace {

EvalResult finish_quad(const QuadResult& qr, double extra_abs, double B) {
  EvalResult r;
  r.value = qr.value / B;
  r.err_estimate =
      (qr.err_estimate + extra_abs) / B + std::fabs(r.value) * 1e-14;
  r.terms_used = qr.nodes_used;
  r.method = Method::quadrature;
  r.converged = qr.converged;
  return r;
}

}  // namespace

EvalResult gauss_2f1_integral(double a, double b, double c, double z,
                              const QuadConfig& cfg) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > b))
    throw std::domain_error("gauss_2f1_integral: need a > 0, 0 < b < c");
  if (!(std::fabs(z) < 1.0))
    throw std::domain_error("gauss_2f1_integral: needs |z| < 1");
  double second = 0.0;
  const QuadResult qr = engine(
      [&](long, double t, double omt, double lnt, double lnomt) -> PairVal {
        const double one_m_zt = omt + (1.0 - z) * t;  // stable 1 - z t
        return {std::exp((b - 1.0) * lnt + (c - b - 1.0) * lnomt -
                         a * std::log(one_m_zt)),
                0.0};
      },
      b - 1.0, c - b - 1.0, cfg, &second);
  return finish_quad(qr, 0.0, beta(b, c - b));
}

EvalResult kummer_1f1_integral(double b, double c, double z,
                               const QuadConfig& cfg) {
  if (!(b > 0.0) || !(c > b))
    throw std::domain_error("kummer_1f1_integral: need 0 < b < c");
  double second = 0.0;
  const QuadResult qr = engine(
      [&](long, double t, double omt, double lnt, double lnomt) -> PairVal {
        return {std::exp((b - 1.0) * lnt + (c - b - 1.0) * lnomt + z * t),
                0.0};
      },
      b - 1.0, c - b - 1.0, cfg, &second);
  return finish_quad(qr, 0.0, beta(b, c - b));
}

namespace {

void require_matching_kernel(const ParamSet& ps, const GenBetaEvaluator& ev) {
  if (ps.alpha != ev.alpha() || ps.beta != ev.beta() || ps.p != ev.p())
    throw std::domain_error(
        "generalized integral: evaluator kernel parameters do not match");
}

}  // namespace

EvalResult gghf_integral(const ParamSet& ps, double z,
                         const GenBetaEvaluator& ev, const QuadConfig& cfg) {
  if (!(ps.a > 0.0) || !(ps.b > 0.0) || !(ps.c > ps.b))
    throw std::domain_error("gghf_integral: need a > 0, 0 < b < c");
  if (!(std::fabs(z) < 1.0))
    throw std::domain_error("gghf_integral: needs |z| < 1");
  require_matching_kernel(ps, ev);
  double kerr_int = 0.0;
  const QuadResult qr = engine(
      [&](long id, double t, double omt, double lnt, double lnomt) -> PairVal {
        double ke = 0.0;
        const double kv = ev.kernel_at(id, t, omt, &ke);
        const double one_m_zt = omt + (1.0 - z) * t;
        const double bf = std::exp((ps.b - 1.0) * lnt +
                                   (ps.c - ps.b - 1.0) * lnomt -
                                   ps.a * std::log(one_m_zt));
        return {bf * kv, bf * ke};
      },
      ps.b - 1.0, ps.c - ps.b - 1.0, cfg, &kerr_int);
  return finish_quad(qr, kerr_int, beta(ps.b, ps.c - ps.b));
}

EvalResult gchf_integral(const ParamSet& ps, double z,
                         const GenBetaEvaluator& ev, const QuadConfig& cfg) {
  if (!(ps.b > 0.0) || !(ps.c > ps.b))
    throw std::domain_error("gchf_integral: need 0 < b < c");
  require_matching_kernel(ps, ev);
  double kerr_int = 0.0;
  const QuadResult qr = engine(
      [&](long id, double t, double omt, double lnt, double lnomt) -> PairVal {
        double ke = 0.0;
        const double kv = ev.kernel_at(id, t, omt, &ke);
        const double bf = std::exp((ps.b - 1.0) * lnt +
                                   (ps.c - ps.b - 1.0) * lnomt + z * t);
        return {bf * kv, bf * ke};
      },
      ps.b - 1.0, ps.c - ps.b - 1.0, cfg, &kerr_int);
  return finish_quad(qr, kerr_int, beta(ps.b, ps.c - ps.b));
}

EvalResult gghf_integral(const ParamSet& ps, double z, const QuadConfig& cfg) {
  return gghf_integral(ps, z, GenBetaEvaluator(ps.alpha, ps.beta, ps.p, cfg),
                       cfg);
}

EvalResult gchf_integral(const ParamSet& ps, double z, const QuadConfig& cfg) {
  return gchf_integral(ps, z, GenBetaEvaluator(ps.alpha, ps.beta, ps.p, cfg),
                       cfg);
}

std::shared_ptr<GenBetaEvaluator> make_gen_beta_evaluator(double alpha,
                                                          double beta, double p,
                                                          QuadConfig cfg) {
  return std::make_shared<GenBetaEvaluator>(alpha, beta, p, cfg);
}

GenBetaFn betagen_for(std::shared_ptr<const GenBetaEvaluator> ev) {
  return [ev = std::move(ev)](double x, double y, double rel_tol) {
    return ev->eval(x, y, rel_tol);
  };
}

}  // namespace hypergruss
