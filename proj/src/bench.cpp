#include "eqcolor/bench.hpp"

#include <chrono>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "eqcolor/io.hpp"
#include "eqcolor/verify.hpp"

namespace eqcolor {

GenSpec bench_instance(Int n, const Rational& zeta, std::uint64_t seed) {
  if (n < 16) throw PreconditionViolation("bench: n must be at least 16");
  GenSpec spec;
  spec.n_a = static_cast<Vertex>(n / 8);
  spec.n_b = static_cast<Vertex>(n - spec.n_a);
  if (zeta <= 0) throw PreconditionViolation("bench: zeta must be positive");
  const BigInt cap = BigInt(n) * denominator(zeta) / numerator(zeta);
  spec.delta_cap = static_cast<Vertex>(cap);
  spec.p = std::min(Rational(1), Rational(5 * spec.delta_cap, 4 * spec.n_b));
  spec.seed = seed;
  return spec;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    BenchRecord rec;
    rec.n = options.sizes[i];
    try {
      std::string text;
      {
        const auto raw = generate(bench_instance(rec.n, options.zeta, options.seed + i));
        rec.m = static_cast<Int>(raw.edges.size());
        std::ostringstream os;
        write_edge_list(os, raw);
        text = std::move(os).str();
      }
      rec.wall_time_ns = std::numeric_limits<std::uint64_t>::max();
      // same steps as `color`: parse, build, color, verify, write
      for (int rep = 0; rep < std::max(1, options.repeats); ++rep) {
        const auto start = Clock::now();
        std::istringstream in(text);
        const auto g = build_graph(read_graph(in, GraphFormat::EdgeList));
        const auto result = color_equitably(g, options.mode);
        std::ostringstream out;
        if (const auto* ok = std::get_if<ColoringSuccess>(&result)) {
          const auto& cover = ok->construction.cover;
          const auto report = verify(g, cover, ok->params.k, ok->params.q, ok->params.r);
          const bool good = report.ok() && report.exact_profile_ok && report.class_count_ok;
          if (good) write_coloring(out, cover, g.size());
          rec.outcome = good ? "ok" : "unverified";
          rec.edge_scans = ok->construction.stats.edge_scans;
          rec.t = ok->params.t;
        } else {
          rec.outcome = "infeasible";
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
        rec.wall_time_ns = std::min<std::uint64_t>(rec.wall_time_ns, elapsed.count());
        rec.delta = g.max_degree();
        rec.b = g.b();
      }
    } catch (const std::exception&) {
      rec.outcome = "error";
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "n,m,delta,wall_time_ns,edge_scans,outcome\n";
  for (const auto& r : records)
    out << r.n << ',' << r.m << ',' << r.delta << ',' << r.wall_time_ns << ',' << r.edge_scans << ','
        << r.outcome << '\n';
}

}  // namespace eqcolor
