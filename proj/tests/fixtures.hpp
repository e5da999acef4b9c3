#pragma once

#include <random>
#include <vector>

#include "eqcolor/graph.hpp"

namespace eqcolor::testing {

inline RawGraph star(Vertex leaves) {
  RawGraph g{leaves + 1, {}};
  for (Vertex v = 1; v <= leaves; ++v) g.edges.emplace_back(0, v);
  return g;
}

inline RawGraph complete_bipartite(Vertex s, Vertex t) {
  RawGraph g{s + t, {}};
  for (Vertex i = 0; i < s; ++i)
    for (Vertex j = 0; j < t; ++j) g.edges.emplace_back(i, s + j);
  return g;
}

inline RawGraph path(Vertex n) {
  RawGraph g{n, {}};
  for (Vertex v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

inline RawGraph cycle(Vertex n) {
  RawGraph g = path(n);
  g.edges.emplace_back(n - 1, 0);
  return g;
}

inline RawGraph disjoint_union(const RawGraph& x, const RawGraph& y) {
  RawGraph g{x.n + y.n, x.edges};
  for (auto [u, v] : y.edges) g.edges.emplace_back(u + x.n, v + x.n);
  return g;
}

/// Random bipartite graph with hidden sides: vertices are shuffled so the
/// bipartition is not aligned with the index order.
inline RawGraph random_bipartite(std::mt19937_64& rng, Vertex n_a, Vertex n_b, double p) {
  std::vector<Vertex> label(static_cast<std::size_t>(n_a + n_b));
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = static_cast<Vertex>(i);
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution coin(p);
  RawGraph g{n_a + n_b, {}};
  for (Vertex i = 0; i < n_a; ++i)
    for (Vertex j = 0; j < n_b; ++j)
      if (coin(rng)) g.edges.emplace_back(label[i], label[n_a + j]);
  return g;
}

}  // namespace eqcolor::testing
