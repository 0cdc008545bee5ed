#pragma once

#include <vector>

#include "hypergruss/types.hpp"

namespace hypergruss::oracle {

// Slow reference implementations used to mint and verify golden values.
// Series terms are rebuilt from log-Pochhammer symbols at every index (no
// shared recurrence with the production code) and integrals use plain
// composite midpoint at a pinned node count, so each value is a pure
// function of its resolution.

double series_2f1(double a, double b, double c, double z, long long n_terms);
double series_1f1(double b, double c, double z, long long n_terms);

double quad_2f1(double a, double b, double c, double z, long long n_nodes);
double quad_1f1(double b, double c, double z, long long n_nodes);
double quad_gen_beta(double x, double y, double alpha, double beta, double p,
                     long long n_nodes);

// Generalized series: outer terms capped at 400 with a provable skip bound;
// inner weighted-beta integrals at `inner_nodes` midpoint nodes.
double series_gghf(const ParamSet& ps, double z, long long inner_nodes);
double series_gchf(const ParamSet& ps, double z, long long inner_nodes);

double quad_gghf(const ParamSet& ps, double z, long long n_nodes);
double quad_gchf(const ParamSet& ps, double z, long long n_nodes);

// Chebyshev functional via the O(n^2) pairwise identity
//   sum_m sum_mxy - sum_mx sum_my
//     = (1/2) sum_i sum_j m_i m_j (x_i - x_j)(y_i - y_j),
// structurally unrelated to the four-accumulator production path.
double gruss_lhs(const std::vector<double>& m, const std::vector<double>& x,
                 const std::vector<double>& y);
double gruss_rhs(const std::vector<double>& m, double x_lo, double x_hi,
                 double y_lo, double y_hi);

}  // namespace hypergruss::oracle
