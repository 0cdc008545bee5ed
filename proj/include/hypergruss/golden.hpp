#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypergruss/types.hpp"

namespace hypergruss {

enum class GoldenKind {
  series_2f1,
  series_1f1,
  quad_2f1,
  quad_1f1,
  quad_gen_beta,
  series_gghf,
  series_gchf,
  quad_gghf,
  quad_gchf,
};

const char* golden_kind_name(GoldenKind k);

struct GoldenRecord {
  GoldenKind kind = GoldenKind::series_2f1;
  ParamSet params;
  double x = 0.0, y = 0.0;  // weighted-beta arguments
  double z = 0.0;
  long long resolution = 0;  // term count or node count; inner nodes for the
                             // generalized series kinds
  double value = 0.0;
};

// Fixed record set with pinned resolutions.  The discretization headroom of
// each record (change observed when the resolution is doubled, with margin)
// lives beside the table; see golden_discretization_bound.
std::vector<GoldenRecord> canonical_golden_records();
double golden_discretization_bound(std::size_t index);

// Evaluate a record through the oracle at its recorded resolution.
double oracle_value(const GoldenRecord& rec);

void write_golden_file(const std::string& path,
                       const std::vector<GoldenRecord>& recs);
std::vector<GoldenRecord> read_golden_file(const std::string& path);

// mint: oracle-evaluate the canonical records and write them to path.
// verify: re-evaluate each record in the file at its recorded resolution and
// compare to the stored value at 1e-13 relative.
// Returned codes: 0 success, 1 verification mismatch, 4 file error.
int mint_golden_file(const std::string& path);
int verify_golden_file(const std::string& path);

}  // namespace hypergruss
