#pragma once

namespace hypergruss {

// ln Gamma(x) for x > 0.  Accurate to ~1e-14 relative; exactly 0 at x = 1, 2.
double log_gamma(double x);

// Euler beta B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), for x, y > 0.
double beta(double x, double y);

// Rising factorial (lam)_n = lam (lam+1) ... (lam+n-1), lam > 0, n >= 0.
double pochhammer(double lam, long n);

// ln (lam)_n = ln Gamma(lam + n) - ln Gamma(lam).
double log_pochhammer(double lam, long n);

// sup_{t in (0,1)} t^x (1-t)^y = x^x y^y / (x+y)^(x+y) for x, y >= 0,
// with the convention 0^0 = 1.
double lambda_envelope(double x, double y);

// Envelope constant bounding the weighted beta B_p(b, c-b):
//   lambda(b-1, c-b-1) * lambda(alpha-1, beta-alpha-1) / (4 p B(alpha, beta-alpha))
// for b >= 1, c >= b + 1, alpha >= 1, beta >= alpha + 1, p > 0.  It combines
// the flat kernel envelope with sup_t t^(b-1) (1-t)^(c-b-1).
double theta_envelope(double b, double c, double alpha, double beta, double p);

}  // namespace hypergruss
