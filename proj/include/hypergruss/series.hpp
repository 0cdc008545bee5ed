#pragma once

#include "hypergruss/types.hpp"

namespace hypergruss {

// Gauss series 2F1(a, b; c; z) for a, b, c > 0 and |z| < 1.
EvalResult gauss_2f1(double a, double b, double c, double z,
                     const EvalConfig& cfg = {});

// Same function summed through its beta-coefficient form,
//   sum_n (a)_n B(b+n, c-b) z^n / (n! B(b, c-b)),
// with every term rebuilt from log-gamma instead of a term recurrence.
// Needs 0 < b < c.  Cross-validation path for gauss_2f1.
EvalResult gauss_2f1_beta_expansion(double a, double b, double c, double z,
                                    const EvalConfig& cfg = {});

// Kummer series 1F1(b; c; z) for b, c > 0 and any real z.  Negative z goes
// through the reflection 1F1(b;c;z) = e^z 1F1(c-b;c;-z) when c > b; very
// negative z switches to the large-argument expansion.  When neither applies
// the alternating sum is used directly and cancellation_warning is set.
EvalResult kummer_1f1(double b, double c, double z, const EvalConfig& cfg = {});

// Generalized Gauss series
//   sum_n (a)_n betagen(b+n, c-b) z^n / (n! B(b, c-b)).
// betagen supplies the kernel-weighted beta values; see quadrature.hpp.
EvalResult gghf_series(const ParamSet& ps, double z, const GenBetaFn& betagen,
                       const EvalConfig& cfg = {});

// Confluent variant: same series without the (a)_n factor; entire in z.
EvalResult gchf_series(const ParamSet& ps, double z, const GenBetaFn& betagen,
                       const EvalConfig& cfg = {});

}  // namespace hypergruss
