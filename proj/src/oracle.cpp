#include "hypergruss/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "hypergruss/scalar.hpp"
#include "hypergruss/summation.hpp"

namespace hypergruss::oracle {

namespace {

template <class F>
double midpoint01(F&& f, long long n) {
  if (n <= 0) throw std::domain_error("oracle: node count must be positive");
  CompensatedSum s;
  const double h = 1.0 / static_cast<double>(n);
  for (long long j = 0; j < n; ++j) s.add(f((j + 0.5) * h));
  return s.value() * h;
}

// Kummer kernel value for w <= 0.  Uses the reflection series below -650 in
// absolute value and the large-argument expansion beyond; the main library
// switches branches at -600, so the window (-650, -600] exercises different
// algorithms on the two sides and serves as a cross-check.
double kummer_neg(double al, double be, double w) {
  if (w == 0.0) return 1.0;
  const double x = -w;
  if (w > -650.0) {
    CompensatedSum s;
    double term = 1.0;
    s.add(term);
    for (long n = 0; n < 100000; ++n) {
      term *= (be - al + n) * x / ((be + n) * (n + 1.0));
      s.add(term);
      if (term < 1e-20 * s.value()) break;
    }
    return std::exp(w) * s.value();
  }
  double lead_ln = log_gamma(be) - log_gamma(be - al) - al * std::log(x);
  if (lead_ln < -745.0) return 0.0;
  double s = 1.0, term = 1.0;
  for (long k = 0; k < 400; ++k) {
    const double num = (al + k) * (al - be + 1.0 + k);
    if (std::fabs(num) >= (k + 1.0) * x) break;
    term *= num / ((k + 1.0) * x);
    s += term;
    if (std::fabs(term) < 1e-18 * std::fabs(s)) break;
  }
  return std::exp(lead_ln) * s;
}

// 1F1(b;c;z) for z > 0 with per-term log-Pochhammer construction.
double positive_1f1(double b, double c, double z, long long n_terms) {
  CompensatedSum s;
  const double lz = std::log(z);
  for (long long n = 0; n < n_terms; ++n) {
    const double lt = log_pochhammer(b, n) - log_pochhammer(c, n) -
                      log_pochhammer(1.0, n) + n * lz;
    const double term = lt < -760.0 ? 0.0 : std::exp(lt);
    if (term == 0.0 && n > 0) break;  // underflowed past the peak
    s.add(term);
  }
  return s.value();
}

}  // namespace

double series_2f1(double a, double b, double c, double z, long long n_terms) {
  if (z == 0.0) return 1.0;
  CompensatedSum s;
  const double lz = std::log(std::fabs(z));
  for (long long n = 0; n < n_terms; ++n) {
    const double lt = log_pochhammer(a, n) + log_pochhammer(b, n) -
                      log_pochhammer(c, n) - log_pochhammer(1.0, n) + n * lz;
    double term = lt < -760.0 ? 0.0 : std::exp(lt);
    if (term == 0.0 && n > 0) break;
    if (z < 0.0 && (n & 1)) term = -term;
    s.add(term);
  }
  return s.value();
}

double series_1f1(double b, double c, double z, long long n_terms) {
  if (z == 0.0) return 1.0;
  if (z > 0.0 || b == c) {
    if (b == c) return std::exp(z);
    return positive_1f1(b, c, z, n_terms);
  }
  if (z <= -650.0) return kummer_neg(b, c, z);
  if (c - b > 0.0) return std::exp(z) * positive_1f1(c - b, c, -z, n_terms);
  // alternating fallback
  CompensatedSum s;
  const double lz = std::log(-z);
  for (long long n = 0; n < n_terms; ++n) {
    const double lt = log_pochhammer(b, n) - log_pochhammer(c, n) -
                      log_pochhammer(1.0, n) + n * lz;
    double term = lt < -760.0 ? 0.0 : std::exp(lt);
    if (term == 0.0 && n > 0) break;
    if (n & 1) term = -term;
    s.add(term);
  }
  return s.value();
}

double quad_2f1(double a, double b, double c, double z, long long n_nodes) {
  if (!(b > 0.0) || !(c > b))
    throw std::domain_error("oracle quad_2f1: need 0 < b < c");
  const double inv_b = 1.0 / beta(b, c - b);
  return inv_b * midpoint01(
                     [&](double t) {
                       return std::exp((b - 1.0) * std::log(t) +
                                       (c - b - 1.0) * std::log1p(-t) -
                                       a * std::log1p(-z * t));
                     },
                     n_nodes);
}

double quad_1f1(double b, double c, double z, long long n_nodes) {
  if (!(b > 0.0) || !(c > b))
    throw std::domain_error("oracle quad_1f1: need 0 < b < c");
  const double inv_b = 1.0 / beta(b, c - b);
  return inv_b * midpoint01(
                     [&](double t) {
                       return std::exp((b - 1.0) * std::log(t) +
                                       (c - b - 1.0) * std::log1p(-t) + z * t);
                     },
                     n_nodes);
}

double quad_gen_beta(double x, double y, double alpha, double beta, double p,
                     long long n_nodes) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("oracle quad_gen_beta: need x, y > 0");
  return midpoint01(
      [&](double t) {
        const double omt = 1.0 - t;
        return std::exp((x - 1.0) * std::log(t) + (y - 1.0) * std::log1p(-t)) *
               kummer_neg(alpha, beta, -p / (t * omt));
      },
      n_nodes);
}

namespace {

double generalized_series_impl(const ParamSet& ps, double z,
                               long long inner_nodes, bool gauss_factor) {
  const double lb0 = log_gamma(ps.b) + log_gamma(ps.c - ps.b) -
                     log_gamma(ps.c);  // ln B(b, c-b)
  CompensatedSum s;
  const double lz = z == 0.0 ? 0.0 : std::log(std::fabs(z));
  for (long n = 0; n < 400; ++n) {
    // prefactor (a)_n z^n / n! (or z^n / n!), built in logs
    double lpf = n * lz - log_pochhammer(1.0, n);
    if (gauss_factor) lpf += log_pochhammer(ps.a, n);
    if (z == 0.0 && n > 0) break;
    double sign = (z < 0.0 && (n & 1)) ? -1.0 : 1.0;
    // the weighted beta is bounded by the plain beta, giving a skip bound
    const double lcap = lpf + log_gamma(ps.b + n) + log_gamma(ps.c - ps.b) -
                        log_gamma(ps.c + n) - lb0;
    if (n > 0 && lcap < std::log(1e-25 * std::max(1e-300, std::fabs(s.value()))))
      break;
    const double gb =
        quad_gen_beta(ps.b + n, ps.c - ps.b, ps.alpha, ps.beta, ps.p,
                      inner_nodes);
    s.add(sign * std::exp(lpf - lb0) * gb);
  }
  return s.value();
}

}  // namespace

double series_gghf(const ParamSet& ps, double z, long long inner_nodes) {
  return generalized_series_impl(ps, z, inner_nodes, true);
}

double series_gchf(const ParamSet& ps, double z, long long inner_nodes) {
  return generalized_series_impl(ps, z, inner_nodes, false);
}

double quad_gghf(const ParamSet& ps, double z, long long n_nodes) {
  if (!(ps.b > 0.0) || !(ps.c > ps.b))
    throw std::domain_error("oracle quad_gghf: need 0 < b < c");
  const double inv_b = 1.0 / beta(ps.b, ps.c - ps.b);
  return inv_b *
         midpoint01(
             [&](double t) {
               const double omt = 1.0 - t;
               return std::exp((ps.b - 1.0) * std::log(t) +
                               (ps.c - ps.b - 1.0) * std::log1p(-t) -
                               ps.a * std::log1p(-z * t)) *
                      kummer_neg(ps.alpha, ps.beta, -ps.p / (t * omt));
             },
             n_nodes);
}

double quad_gchf(const ParamSet& ps, double z, long long n_nodes) {
  if (!(ps.b > 0.0) || !(ps.c > ps.b))
    throw std::domain_error("oracle quad_gchf: need 0 < b < c");
  const double inv_b = 1.0 / beta(ps.b, ps.c - ps.b);
  return inv_b *
         midpoint01(
             [&](double t) {
               const double omt = 1.0 - t;
               return std::exp((ps.b - 1.0) * std::log(t) +
                               (ps.c - ps.b - 1.0) * std::log1p(-t) + z * t) *
                      kummer_neg(ps.alpha, ps.beta, -ps.p / (t * omt));
             },
             n_nodes);
}

double gruss_lhs(const std::vector<double>& m, const std::vector<double>& x,
                 const std::vector<double>& y) {
  const std::size_t n = m.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      acc += m[i] * m[j] * (x[i] - x[j]) * (y[i] - y[j]);
  return std::fabs(0.5 * acc);
}

double gruss_rhs(const std::vector<double>& m, double x_lo, double x_hi,
                 double y_lo, double y_hi) {
  double sm = 0.0;
  for (double v : m) sm += v;
  return 0.25 * sm * sm * (x_hi - x_lo) * (y_hi - y_lo);
}

}  // namespace hypergruss::oracle
