#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqcolor/engine.hpp"
#include "eqcolor/generator.hpp"

namespace eqcolor {

struct BenchRecord {
  Int n = 0;
  Int m = 0;
  Int delta = 0;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t edge_scans = 0;
  std::string outcome;  // ok | infeasible | unverified | error
  // not written to CSV; kept for the work-bound check |E| + t|B|
  Int t = 0;
  Int b = 0;
};

struct BenchOptions {
  std::vector<Int> sizes;
  Rational zeta = 21;
  std::uint64_t seed = 1;
  Mode mode = Mode::BestEffort;
  int repeats = 3;  // wall time is the minimum over repeats
};

/// Instance used for size n: delta cap floor(n / zeta), |A| = n/8, edge
/// probability min(1, 5 cap / (4 |B|)) so most A-vertices hit the cap.
GenSpec bench_instance(Int n, const Rational& zeta, std::uint64_t seed);

/// Times the full coloring pipeline (parse an in-memory edge list, build,
/// color, verify, write) for every size, in input order.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace eqcolor
