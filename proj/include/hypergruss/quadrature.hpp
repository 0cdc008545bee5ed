#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <utility>

#include "hypergruss/types.hpp"

namespace hypergruss {

struct QuadConfig {
  int base_level = 6;     // first dyadic refinement level
  int max_level = 12;     // last level tried before giving up
  double rel_tol = 1e-11;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute
  long nodes_used = 0;
  int level_used = 0;
  bool converged = false;
};

// Integral of f over (0,1) by the tanh-sinh rule on a fixed dyadic node
// ladder.  f receives (t, 1-t) with the complement formed in the transformed
// variable, so integrands with endpoint singularities stay accurate.  sing =
// (sx, sy) declares |f| <~ t^sx (1-t)^sy with sx, sy > -1 and only steers how
// far into the endpoints the node range extends.
QuadResult integrate01(const std::function<double(double, double)>& f,
                       std::pair<double, double> sing,
                       const QuadConfig& cfg = {});

class GenBetaEvaluator;

EvalResult gghf_integral(const ParamSet& ps, double z,
                         const GenBetaEvaluator& ev, const QuadConfig& cfg);
EvalResult gchf_integral(const ParamSet& ps, double z,
                         const GenBetaEvaluator& ev, const QuadConfig& cfg);

// Weighted beta integral
//   B_p(x, y) = int_0^1 t^(x-1) (1-t)^(y-1) 1F1(alpha; beta; -p/(t(1-t))) dt.
// One evaluator per (alpha, beta, p).  Kernel values at the quadrature nodes
// are cached; concurrent lookups and idempotent fills are thread-safe, so a
// single evaluator may be shared across series terms and across threads.
class GenBetaEvaluator {
 public:
  GenBetaEvaluator(double alpha, double beta, double p, QuadConfig cfg = {});

  GenBetaValue eval(double x, double y, double rel_tol) const;
  GenBetaValue eval(double x, double y) const { return eval(x, y, cfg_.rel_tol); }

  // Kummer kernel 1F1(alpha; beta; -p/(t(1-t))), uncached form.
  double kernel_value(double t, double one_minus_t) const;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double p() const { return p_; }

 private:
  double kernel_at(long node_id, double t, double omt, double* abs_err) const;

  friend EvalResult gghf_integral(const ParamSet&, double,
                                  const GenBetaEvaluator&, const QuadConfig&);
  friend EvalResult gchf_integral(const ParamSet&, double,
                                  const GenBetaEvaluator&, const QuadConfig&);

  double alpha_, beta_, p_;
  QuadConfig cfg_;
  std::unique_ptr<std::atomic<double>[]> kv_;  // kernel values, NaN = unfilled
  std::unique_ptr<std::atomic<double>[]> ke_;  // kernel error estimates
};

GenBetaValue gen_beta(double x, double y, double alpha, double beta, double p,
                      const QuadConfig& cfg = {});

// Integral representations of the classical and generalized functions; same
// result surface as the series forms (terms_used counts quadrature nodes).
EvalResult gauss_2f1_integral(double a, double b, double c, double z,
                              const QuadConfig& cfg = {});
EvalResult kummer_1f1_integral(double b, double c, double z,
                               const QuadConfig& cfg = {});
EvalResult gghf_integral(const ParamSet& ps, double z,
                         const QuadConfig& cfg = {});
EvalResult gchf_integral(const ParamSet& ps, double z,
                         const QuadConfig& cfg = {});

std::shared_ptr<GenBetaEvaluator> make_gen_beta_evaluator(double alpha,
                                                          double beta, double p,
                                                          QuadConfig cfg = {});

// Adapter handing an evaluator to the generalized series.
GenBetaFn betagen_for(std::shared_ptr<const GenBetaEvaluator> ev);

}  // namespace hypergruss
