#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fgr/checked.hpp"

namespace fgr {

// Exit codes: 0 success, 1 domain failure (mismatches, budget), 2 usage or
// parse error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchOptions {
  int k = 5;
  std::vector<int> log2_m{10, 11, 12, 13, 14, 15};
  double density_exponent = 1.5;  // m = n^density_exponent
  std::uint64_t seed = 1;
  std::int64_t trials = 2;  // heavy and light trials per run
  int repeats = 3;          // wall time is the median over repeats
  double time_budget_seconds = 0;
};

struct BenchRow {
  int n = 0;
  std::int64_t m = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::int64_t wall_ns = 0;
  std::int64_t paths_enumerated = 0;
  std::int64_t heavy_nodes = 0;
  std::optional<Weight> weight;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::optional<double> slope;  // least squares of log(wall) on log(m); none for < 2 sizes
  bool budget_exhausted = false;
};

BenchResult run_bench(const BenchOptions& options, std::ostream* csv = nullptr);
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& r);

}  // namespace fgr
