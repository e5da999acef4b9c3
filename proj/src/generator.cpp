#include "eqcolor/generator.hpp"

#include <algorithm>
#include <random>

namespace eqcolor {

RawGraph generate(const GenSpec& spec) {
  if (spec.n_a < 0 || spec.n_b < 0 || spec.delta_cap < 0)
    throw PreconditionViolation("generate: sizes and degree cap must be nonnegative");
  if (spec.p < 0 || spec.p > 1) throw PreconditionViolation("generate: p must lie in [0, 1]");

  const bool always = spec.p == 1;
  std::uint64_t threshold = 0;
  if (!always) {
    BigInt scaled = numerator(spec.p) * (BigInt(1) << 64) / denominator(spec.p);
    threshold = static_cast<std::uint64_t>(scaled);
  }

  std::mt19937_64 rng(spec.seed);
  RawGraph g;
  g.n = spec.n_a + spec.n_b;
  std::vector<Vertex> b_degree(static_cast<std::size_t>(spec.n_b), 0);

  // Trimming an A-vertex only touches B-vertices, so A-vertices can be trimmed
  // while sampling: keeping the first delta_cap neighbors drops the highest ones.
  for (Vertex a = 0; a < spec.n_a; ++a) {
    Vertex degree = 0;
    for (Vertex j = 0; j < spec.n_b; ++j) {
      const bool keep = always || rng() < threshold;
      if (keep && degree < spec.delta_cap) {
        g.edges.emplace_back(a, spec.n_a + j);
        ++b_degree[j];
        ++degree;
      }
    }
  }

  // B-vertices: drop edges to the highest-index A-vertices first.
  std::vector<Vertex> excess(b_degree.size());
  bool any = false;
  for (std::size_t j = 0; j < b_degree.size(); ++j) {
    excess[j] = std::max<Vertex>(0, b_degree[j] - spec.delta_cap);
    any |= excess[j] > 0;
  }
  if (any) {
    std::vector<bool> dropped(g.edges.size(), false);
    for (std::size_t i = g.edges.size(); i-- > 0;) {
      auto& left = excess[g.edges[i].second - spec.n_a];
      if (left > 0) {
        --left;
        dropped[i] = true;
      }
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
      if (!dropped[i]) g.edges[out++] = g.edges[i];
    g.edges.resize(out);
  }
  return g;
}

}  // namespace eqcolor
