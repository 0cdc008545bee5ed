#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergruss/quadrature.hpp"
#include "hypergruss/series.hpp"
#include "hypergruss/types.hpp"

namespace hypergruss {

using ArgList = std::vector<std::pair<std::string, double>>;

// One evaluated inequality instance.  slack = rhs - lhs; holds = slack >= 0.
// uncertain marks |slack| within ten times the accumulated numerical error
// budget: such points are inconclusive rather than counterexamples.  Reports
// with gating = false are informational variants and never count as failures.
struct IneqReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double err_budget = 0.0;
  bool holds = false;
  bool uncertain = false;
  bool gating = true;
  ParamSet params;
  ArgList args;
};

struct CheckOptions {
  EvalConfig series{.rel_tol = 1e-10};
  QuadConfig quad{};
  // Optional shared kernel cache; used when its (alpha, beta, p) match.
  std::shared_ptr<const GenBetaEvaluator> ev;
  // Evaluate even when the hypotheses fail (instead of throwing).
  bool exploratory = false;
};

// ---- discrete weighted Gruess inequality -----------------------------------

struct GrussInstance {
  std::vector<double> x, y, m;  // sequences and nonnegative weights
  double x_lo = 0.0, x_hi = 0.0;  // enclosing bounds for x
  double y_lo = 0.0, y_hi = 0.0;  // enclosing bounds for y
};

// |sum m * sum mxy - sum mx * sum my|
//   <= (1/4) (sum m)^2 (x_hi - x_lo) (y_hi - y_lo)
IneqReport gruss_check(const GrussInstance& g);

// ---- normalized ratios -----------------------------------------------------

// Generalized function divided by the normalized weighted beta, so the value
// at z = 0 is exactly 1.
double ratio_confluent(const ParamSet& ps, double z,
                       const CheckOptions& opt = {});
double ratio_gauss(const ParamSet& ps, double z, const CheckOptions& opt = {});

// ---- hypothesis validators -------------------------------------------------
// Return the first violated condition as text, or nullopt when all hold.
// The matching check_* function throws HypothesisViolation on a gap unless
// opt.exploratory is set.

std::optional<std::string> envelopes_hypothesis_gap(const ParamSet& ps,
                                                    double z, double t);
std::optional<std::string> generalized_envelopes_hypothesis_gap(
    const ParamSet& ps, double z);
std::optional<std::string> ratio_confluent_hypothesis_gap(const ParamSet& ps,
                                                          double z, double z0);
std::optional<std::string> ratio_gauss_hypothesis_gap(const ParamSet& ps,
                                                      double z, double z0);
std::optional<std::string> shift_confluent_hypothesis_gap(const ParamSet& ps,
                                                          double z1, double z2,
                                                          double z3);
std::optional<std::string> shift_gauss_hypothesis_gap(const ParamSet& ps,
                                                      double z1, double z2,
                                                      double z3);

// ---- inequality checkers ---------------------------------------------------

// Pointwise envelopes: the confluent and Gauss functions against their
// endpoint envelopes, the kernel against its flat and windowed bounds at a
// given t, and the weighted beta against the theta envelope.
std::vector<IneqReport> check_envelopes(const ParamSet& ps, double z, double t,
                                        const CheckOptions& opt = {});

// Generalized functions bounded by kernel-envelope multiples of the
// classical ones.
std::vector<IneqReport> check_generalized_envelopes(
    const ParamSet& ps, double z, const CheckOptions& opt = {});

// Gruess-type bounds on the confluent ratio between two arguments
// 0 < z <= z0: a centered difference form and an exponential-shift form.
std::vector<IneqReport> check_ratio_confluent(const ParamSet& ps, double z,
                                              double z0,
                                              const CheckOptions& opt = {});

// Same for the Gauss ratio on 0 < z <= z0 < 1: centered and power-scaled
// forms, each with a tighter non-gating "-alt" variant reported alongside.
std::vector<IneqReport> check_ratio_gauss(const ParamSet& ps, double z,
                                          double z0,
                                          const CheckOptions& opt = {});

// Exponential-shift bound linking confluent values at z1 z2 z3 and z1 z3.
std::vector<IneqReport> check_shift_confluent(const ParamSet& ps, double z1,
                                              double z2, double z3,
                                              const CheckOptions& opt = {});

// Power-weighted shift bound for the Gauss variant, z3 in [0, 1).
std::vector<IneqReport> check_shift_gauss(const ParamSet& ps, double z1,
                                          double z2, double z3,
                                          const CheckOptions& opt = {});

// ---- classical (p = 0) limit statements ------------------------------------

enum class ClassicalLimit {
  ratio_confluent,
  ratio_gauss,
  shift_confluent,
  shift_gauss,
};

const char* classical_limit_name(ClassicalLimit which);
std::optional<ClassicalLimit> classical_limit_from_name(const std::string& s);

std::optional<std::string> classical_limit_hypothesis_gap(ClassicalLimit which,
                                                          const ParamSet& ps,
                                                          double u1, double u2,
                                                          double u3);

// The same four bound families stated directly for the classical functions.
// For the ratio kinds (u1, u2) = (z, z0); for the shift kinds (u1, u2, u3) =
// (z1, z2, z3).
std::vector<IneqReport> check_classical_limit(ClassicalLimit which,
                                              const ParamSet& ps, double u1,
                                              double u2, double u3,
                                              const CheckOptions& opt = {});

}  // namespace hypergruss
