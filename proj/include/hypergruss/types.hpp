#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace hypergruss {

enum class Method { series, quadrature };

struct EvalConfig {
  double rel_tol = 1e-12;
  long max_terms = 1000000;
  int consecutive_small = 3;  // successive negligible terms required to stop
};

struct EvalResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute
  long terms_used = 0;
  Method method = Method::series;
  bool converged = false;
  bool cancellation_warning = false;
};

// Parameter bundle for the generalized family.  alpha/beta/p fix the
// confluent kernel; p = 0 recovers the classical functions.  `a` is ignored
// by the confluent variants.
struct ParamSet {
  double a = 1.0;
  double b = 1.0;
  double c = 2.0;
  double alpha = 1.0;
  double beta = 2.0;
  double p = 0.0;
};

struct GenBetaValue {
  double raw = 0.0;         // integral over (0,1)
  double normalized = 0.0;  // raw / B(x, y)
  double err_estimate = 0.0;  // absolute, on raw
  long nodes_used = 0;
};

// betagen(x, y, rel_tol): generalized beta at the kernel fixed by the
// enclosing evaluator, integrated to the requested relative tolerance.
using GenBetaFn =
    std::function<GenBetaValue(double x, double y, double rel_tol)>;

class HypothesisViolation : public std::domain_error {
 public:
  explicit HypothesisViolation(const std::string& cond)
      : std::domain_error("hypothesis violated: " + cond) {}
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypergruss
