#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypergruss/inequalities.hpp"

namespace hypergruss {

struct GridAxis {
  double lo = 0.0, hi = 0.0;
  int steps = 1;
};

// "lo:hi:steps" or a bare value (one step).
GridAxis parse_axis(const std::string& text);
std::vector<double> axis_values(const GridAxis& ax);

enum class CheckerId {
  envelopes,
  generalized_envelopes,
  ratio_confluent,
  ratio_gauss,
  shift_confluent,
  shift_gauss,
  classical,
  gruss_random,
};

std::optional<CheckerId> checker_from_name(const std::string& s);
const char* checker_name(CheckerId id);

struct SweepSpec {
  CheckerId checker = CheckerId::envelopes;
  // c and beta are swept through offsets so every grid point satisfies
  // c > b and beta > alpha by construction
  GridAxis a{2.0, 2.0, 1};
  GridAxis b{1.0, 1.0, 1};
  GridAxis c_offset{1.0, 1.0, 1};
  GridAxis alpha{1.0, 1.0, 1};
  GridAxis beta_offset{1.5, 1.5, 1};
  GridAxis p{1.0, 1.0, 1};
  GridAxis z{0.5, 0.5, 1};
  GridAxis z0{0.8, 0.8, 1};
  GridAxis z1{0.5, 0.5, 1};
  GridAxis z2{0.5, 0.5, 1};
  GridAxis z3{0.5, 0.5, 1};
  GridAxis t_grid{0.05, 0.95, 19};
  ClassicalLimit which = ClassicalLimit::ratio_confluent;
  unsigned long long seed = 20240817;
  int trials = 1000;
  int max_n = 200;  // longest random sequence
  CheckOptions opts;
};

struct SweepSummary {
  std::string checker;
  long cartesian = 0;  // grid points enumerated
  long skipped = 0;    // points failing the hypotheses
  long evaluated = 0;
  long passed = 0;     // per point, over gating reports
  long uncertain = 0;
  long failed = 0;     // certain failures
  long reports_total = 0;
  long reports_informational = 0;
  bool has_worst = false;
  IneqReport worst;  // gating report with the smallest slack
  double wall_seconds = 0.0;
  std::vector<IneqReport> reports;  // all reports, grid order
};

// HYPERGRUSS_THREADS (when set) caps the worker count; requested <= 0 means
// "hardware concurrency".
int resolve_thread_count(int requested);

SweepSummary run_sweep(const SweepSpec& spec, int threads = 0);

std::string format_double(double v);  // %.17g
void write_reports_ndjson(std::ostream& os, const SweepSummary& s);
void write_reports_csv(std::ostream& os, const SweepSummary& s);
// Human summary for stdout; wall time is printed only here, never in the
// report files, which must be byte-stable run to run.
void print_summary(std::ostream& os, const SweepSummary& s);

}  // namespace hypergruss
