#include "hypergruss/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace hypergruss {

GridAxis parse_axis(const std::string& text) {
  GridAxis ax;
  const std::domain_error bad("bad grid axis '" + text +
                              "' (want value or lo:hi:steps)");
  try {
    std::size_t pos = 0;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
      ax.lo = ax.hi = std::stod(text, &pos);
      if (pos != text.size()) throw bad;
      ax.steps = 1;
      return ax;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw bad;
    const std::string lo = text.substr(0, c1);
    const std::string hi = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string steps = text.substr(c2 + 1);
    ax.lo = std::stod(lo, &pos);
    if (pos != lo.size()) throw bad;
    ax.hi = std::stod(hi, &pos);
    if (pos != hi.size()) throw bad;
    ax.steps = std::stoi(steps, &pos);
    if (pos != steps.size()) throw bad;
  } catch (const std::invalid_argument&) {
    throw bad;
  } catch (const std::out_of_range&) {
    throw bad;
  }
  if (ax.steps < 1)
    throw std::domain_error("bad grid axis '" + text + "': steps must be >= 1");
  return ax;
}

std::vector<double> axis_values(const GridAxis& ax) {
  std::vector<double> v;
  if (ax.steps == 1) {
    v.push_back(ax.lo);
    return v;
  }
  for (int i = 0; i < ax.steps; ++i)
    v.push_back(ax.lo + (ax.hi - ax.lo) * i / (ax.steps - 1));
  return v;
}

namespace {

struct CheckerInfo {
  CheckerId id;
  const char* name;
};

constexpr CheckerInfo kCheckers[] = {
    {CheckerId::envelopes, "envelopes"},
    {CheckerId::generalized_envelopes, "generalized-envelopes"},
    {CheckerId::ratio_confluent, "ratio-confluent"},
    {CheckerId::ratio_gauss, "ratio-gauss"},
    {CheckerId::shift_confluent, "shift-confluent"},
    {CheckerId::shift_gauss, "shift-gauss"},
    {CheckerId::classical, "classical"},
    {CheckerId::gruss_random, "gruss-random"},
};

}  // namespace

std::optional<CheckerId> checker_from_name(const std::string& s) {
  for (const auto& c : kCheckers)
    if (s == c.name) return c.id;
  return std::nullopt;
}

const char* checker_name(CheckerId id) {
  for (const auto& c : kCheckers)
    if (c.id == id) return c.name;
  return "?";
}

int resolve_thread_count(int requested) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap <= 0) cap = 1;
  if (const char* env = std::getenv("HYPERGRUSS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) cap = std::min(cap, v);
  }
  if (requested <= 0) return cap;
  return std::min(requested, cap);
}

namespace {

struct Point {
  ParamSet ps;
  double v1 = 0.0, v2 = 0.0, v3 = 0.0;
  long trial = -1;
};

// One kernel evaluator per (alpha, beta, p), shared across points/threads.
class EvaluatorPool {
 public:
  explicit EvaluatorPool(QuadConfig cfg) : cfg_(cfg) {}
  std::shared_ptr<const GenBetaEvaluator> get(double alpha, double beta,
                                              double p) {
    const auto key = std::make_tuple(alpha, beta, p);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pool_.find(key);
    if (it != pool_.end()) return it->second;
    auto ev = make_gen_beta_evaluator(alpha, beta, p, cfg_);
    pool_.emplace(key, ev);
    return ev;
  }

 private:
  QuadConfig cfg_;
  std::mutex mu_;
  std::map<std::tuple<double, double, double>,
           std::shared_ptr<const GenBetaEvaluator>>
      pool_;
};

GrussInstance random_gruss_instance(unsigned long long seed, long trial,
                                    int max_n) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  GrussInstance g;
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
  const double style = unif(rng);
  const bool zero_weights = style < 0.08;
  const bool const_x = style >= 0.08 && style < 0.16;
  const bool const_y = style >= 0.16 && style < 0.24;
  const double cx = 6.0 * unif(rng) - 3.0;
  const double cy = 6.0 * unif(rng) - 3.0;
  g.x.resize(n);
  g.y.resize(n);
  g.m.resize(n);
  for (int i = 0; i < n; ++i) {
    g.x[i] = const_x ? cx : 6.0 * unif(rng) - 3.0;
    g.y[i] = const_y ? cy : 6.0 * unif(rng) - 3.0;
    double w = zero_weights ? 0.0 : 2.0 * unif(rng);
    if (!zero_weights && unif(rng) < 0.15) w = 0.0;  // sparse zeros
    g.m[i] = w;
  }
  g.x_lo = *std::min_element(g.x.begin(), g.x.end());
  g.x_hi = *std::max_element(g.x.begin(), g.x.end());
  g.y_lo = *std::min_element(g.y.begin(), g.y.end());
  g.y_hi = *std::max_element(g.y.begin(), g.y.end());
  if (unif(rng) < 0.5) {  // sometimes pad the bounds outward
    g.x_lo -= unif(rng);
    g.x_hi += unif(rng);
    g.y_lo -= unif(rng);
    g.y_hi += unif(rng);
  }
  return g;
}

std::optional<std::string> point_hypothesis_gap(const SweepSpec& spec,
                                                const Point& pt) {
  switch (spec.checker) {
    case CheckerId::envelopes:
      return envelopes_hypothesis_gap(pt.ps, pt.v1, 0.5);
    case CheckerId::generalized_envelopes:
      return generalized_envelopes_hypothesis_gap(pt.ps, pt.v1);
    case CheckerId::ratio_confluent:
      return ratio_confluent_hypothesis_gap(pt.ps, pt.v1, pt.v2);
    case CheckerId::ratio_gauss:
      return ratio_gauss_hypothesis_gap(pt.ps, pt.v1, pt.v2);
    case CheckerId::shift_confluent:
      return shift_confluent_hypothesis_gap(pt.ps, pt.v1, pt.v2, pt.v3);
    case CheckerId::shift_gauss:
      return shift_gauss_hypothesis_gap(pt.ps, pt.v1, pt.v2, pt.v3);
    case CheckerId::classical:
      return classical_limit_hypothesis_gap(spec.which, pt.ps, pt.v1, pt.v2,
                                            pt.v3);
    case CheckerId::gruss_random:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<IneqReport> run_point(const SweepSpec& spec, const Point& pt,
                                  const std::vector<double>& t_values,
                                  EvaluatorPool& pool) {
  CheckOptions opt = spec.opts;
  if (spec.checker != CheckerId::gruss_random)
    opt.ev = pool.get(pt.ps.alpha, pt.ps.beta, pt.ps.p);
  switch (spec.checker) {
    case CheckerId::envelopes: {
      std::vector<IneqReport> out;
      bool first = true;
      for (double t : t_values) {
        auto reports = check_envelopes(pt.ps, pt.v1, t, opt);
        for (auto& r : reports) {
          const bool t_dependent =
              std::any_of(r.args.begin(), r.args.end(),
                          [](const auto& kv) { return kv.first == "t"; });
          if (first || t_dependent) out.push_back(std::move(r));
        }
        first = false;
      }
      return out;
    }
    case CheckerId::generalized_envelopes:
      return check_generalized_envelopes(pt.ps, pt.v1, opt);
    case CheckerId::ratio_confluent:
      return check_ratio_confluent(pt.ps, pt.v1, pt.v2, opt);
    case CheckerId::ratio_gauss:
      return check_ratio_gauss(pt.ps, pt.v1, pt.v2, opt);
    case CheckerId::shift_confluent:
      return check_shift_confluent(pt.ps, pt.v1, pt.v2, pt.v3, opt);
    case CheckerId::shift_gauss:
      return check_shift_gauss(pt.ps, pt.v1, pt.v2, pt.v3, opt);
    case CheckerId::classical:
      return check_classical_limit(spec.which, pt.ps, pt.v1, pt.v2, pt.v3,
                                   opt);
    case CheckerId::gruss_random: {
      auto g = random_gruss_instance(spec.seed, pt.trial, spec.max_n);
      auto rep = gruss_check(g);
      rep.args.push_back({"trial", static_cast<double>(pt.trial)});
      return {rep};
    }
  }
  return {};
}

}  // namespace

SweepSummary run_sweep(const SweepSpec& spec, int threads) {
  const auto t_start = std::chrono::steady_clock::now();
  SweepSummary sum;
  sum.checker = checker_name(spec.checker);

  // Enumerate grid points in a fixed nesting order so reports are emitted
  // deterministically whatever the thread count.
  std::vector<Point> points;
  if (spec.checker == CheckerId::gruss_random) {
    for (long i = 0; i < spec.trials; ++i) {
      Point pt;
      pt.trial = i;
      points.push_back(pt);
    }
    sum.cartesian = spec.trials;
  } else {
    const bool uses_a = spec.checker == CheckerId::envelopes ||
                        spec.checker == CheckerId::generalized_envelopes ||
                        spec.checker == CheckerId::ratio_gauss ||
                        spec.checker == CheckerId::shift_gauss ||
                        spec.checker == CheckerId::classical;
    const bool uses_ratio_args =
        spec.checker == CheckerId::ratio_confluent ||
        spec.checker == CheckerId::ratio_gauss ||
        (spec.checker == CheckerId::classical &&
         (spec.which == ClassicalLimit::ratio_confluent ||
          spec.which == ClassicalLimit::ratio_gauss));
    const bool uses_shift_args =
        spec.checker == CheckerId::shift_confluent ||
        spec.checker == CheckerId::shift_gauss ||
        (spec.checker == CheckerId::classical && !uses_ratio_args);
    const bool uses_z = spec.checker == CheckerId::envelopes ||
                        spec.checker == CheckerId::generalized_envelopes;
    const bool uses_kernel = spec.checker != CheckerId::classical;

    const std::vector<double> one{0.0};
    const auto va = uses_a ? axis_values(spec.a) : one;
    const auto vb = axis_values(spec.b);
    const auto vco = axis_values(spec.c_offset);
    const auto val = uses_kernel ? axis_values(spec.alpha) : one;
    const auto vbo = uses_kernel ? axis_values(spec.beta_offset) : one;
    const auto vp = uses_kernel ? axis_values(spec.p) : one;
    const auto vz = (uses_z || uses_ratio_args) ? axis_values(spec.z) : one;
    const auto vz0 = uses_ratio_args ? axis_values(spec.z0) : one;
    const auto vz1 = uses_shift_args ? axis_values(spec.z1) : one;
    const auto vz2 = uses_shift_args ? axis_values(spec.z2) : one;
    const auto vz3 = uses_shift_args ? axis_values(spec.z3) : one;

    for (double a : va)
      for (double b : vb)
        for (double co : vco)
          for (double al : val)
            for (double bo : vbo)
              for (double p : vp)
                for (double z : vz)
                  for (double zz0 : vz0)
                    for (double zz1 : vz1)
                      for (double zz2 : vz2)
                        for (double zz3 : vz3) {
                          ++sum.cartesian;
                          Point pt;
                          pt.ps = ParamSet{uses_a ? a : 1.0, b, b + co,
                                           uses_kernel ? al : 1.0,
                                           uses_kernel ? al + bo : 2.0,
                                           uses_kernel ? p : 0.0};
                          if (uses_ratio_args) {
                            pt.v1 = z;
                            pt.v2 = zz0;
                          } else if (uses_shift_args) {
                            pt.v1 = zz1;
                            pt.v2 = zz2;
                            pt.v3 = zz3;
                          } else {
                            pt.v1 = z;
                          }
                          if (!spec.opts.exploratory &&
                              point_hypothesis_gap(spec, pt)) {
                            ++sum.skipped;
                            continue;
                          }
                          points.push_back(pt);
                        }
  }
  sum.evaluated = static_cast<long>(points.size());

  const auto t_values = axis_values(spec.t_grid);
  EvaluatorPool pool(spec.opts.quad);
  std::vector<std::vector<IneqReport>> results(points.size());
  const int nthreads =
      std::max(1, std::min<int>(resolve_thread_count(threads),
                                static_cast<int>(points.size()) + 1));
  std::atomic<std::size_t> cursor{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= points.size()) return;
      try {
        results[i] = run_point(spec, points[i], t_values, pool);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (int i = 0; i < nthreads; ++i) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& reports : results) {
    bool any_fail = false, any_uncertain = false;
    for (const auto& r : reports) {
      ++sum.reports_total;
      if (!r.gating) {
        ++sum.reports_informational;
        continue;
      }
      if (!r.holds && !r.uncertain) any_fail = true;
      if (r.uncertain) any_uncertain = true;
      if (!sum.has_worst || r.slack < sum.worst.slack) {
        sum.worst = r;
        sum.has_worst = true;
      }
    }
    if (any_fail)
      ++sum.failed;
    else if (any_uncertain)
      ++sum.uncertain;
    else
      ++sum.passed;
  }
  sum.reports.reserve(sum.reports_total);
  for (auto& reports : results)
    for (auto& r : reports) sum.reports.push_back(std::move(r));

  sum.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return sum;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void json_number(std::ostream& os, double v) {
  if (std::isfinite(v))
    os << format_double(v);
  else
    os << "null";
}

const char* const kArgKeys[] = {"z", "z0", "z1", "z2", "z3", "t", "n", "trial"};

std::optional<double> arg_value(const IneqReport& r, const std::string& key) {
  for (const auto& kv : r.args)
    if (kv.first == key) return kv.second;
  return std::nullopt;
}

}  // namespace

void write_reports_ndjson(std::ostream& os, const SweepSummary& s) {
  for (const auto& r : s.reports) {
    os << "{\"schema_version\":1,\"checker\":\"" << s.checker
       << "\",\"name\":\"" << r.name << "\",\"gating\":"
       << (r.gating ? "true" : "false") << ",\"params\":{";
    os << "\"a\":";
    json_number(os, r.params.a);
    os << ",\"b\":";
    json_number(os, r.params.b);
    os << ",\"c\":";
    json_number(os, r.params.c);
    os << ",\"alpha\":";
    json_number(os, r.params.alpha);
    os << ",\"beta\":";
    json_number(os, r.params.beta);
    os << ",\"p\":";
    json_number(os, r.params.p);
    os << "},\"args\":{";
    bool first = true;
    for (const auto& kv : r.args) {
      if (!first) os << ',';
      first = false;
      os << '"' << kv.first << "\":";
      json_number(os, kv.second);
    }
    os << "},\"lhs\":";
    json_number(os, r.lhs);
    os << ",\"rhs\":";
    json_number(os, r.rhs);
    os << ",\"slack\":";
    json_number(os, r.slack);
    os << ",\"err_budget\":";
    json_number(os, r.err_budget);
    os << ",\"holds\":" << (r.holds ? "true" : "false")
       << ",\"uncertain\":" << (r.uncertain ? "true" : "false") << "}\n";
  }
}

void write_reports_csv(std::ostream& os, const SweepSummary& s) {
  os << "schema_version,checker,name,gating,a,b,c,alpha,beta,p,z,z0,z1,z2,z3,"
        "t,n,trial,lhs,rhs,slack,err_budget,holds,uncertain\n";
  for (const auto& r : s.reports) {
    os << "1," << s.checker << ',' << r.name << ','
       << (r.gating ? "true" : "false") << ',';
    const double params[6] = {r.params.a,     r.params.b,    r.params.c,
                              r.params.alpha, r.params.beta, r.params.p};
    for (double v : params) {
      if (std::isfinite(v)) os << format_double(v);
      os << ',';
    }
    for (const char* key : kArgKeys) {
      if (auto v = arg_value(r, key)) os << format_double(*v);
      os << ',';
    }
    os << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.slack) << ',' << format_double(r.err_budget) << ','
       << (r.holds ? "true" : "false") << ','
       << (r.uncertain ? "true" : "false") << '\n';
  }
}

void print_summary(std::ostream& os, const SweepSummary& s) {
  os << "checker:  " << s.checker << '\n';
  os << "grid:     " << s.cartesian << " points, " << s.skipped
     << " skipped by hypotheses, " << s.evaluated << " evaluated\n";
  os << "reports:  " << s.reports_total << " total ("
     << s.reports_informational << " informational)\n";
  os << "points:   " << s.passed << " passed, " << s.uncertain
     << " uncertain, " << s.failed << " failed\n";
  if (s.has_worst) {
    os << "worst:    slack " << format_double(s.worst.slack) << " at "
       << s.worst.name;
    for (const auto& kv : s.worst.args)
      os << ' ' << kv.first << '=' << format_double(kv.second);
    if (std::isfinite(s.worst.params.b))
      os << " [a=" << format_double(s.worst.params.a)
         << " b=" << format_double(s.worst.params.b)
         << " c=" << format_double(s.worst.params.c)
         << " alpha=" << format_double(s.worst.params.alpha)
         << " beta=" << format_double(s.worst.params.beta)
         << " p=" << format_double(s.worst.params.p) << "]";
    os << '\n';
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", s.wall_seconds);
  os << "wall:     " << buf << " s\n";
}

}  // namespace hypergruss
