#pragma once

#include <cstdint>

#include "eqcolor/graph.hpp"
#include "eqcolor/rational.hpp"

namespace eqcolor {

/// Random bipartite instance. Vertices 0..n_a-1 form one side and
/// n_a..n_a+n_b-1 the other.
struct GenSpec {
  Vertex n_a = 0;
  Vertex n_b = 0;
  Vertex delta_cap = 0;
  Rational p = 0;  // edge probability in [0, 1]
  std::uint64_t seed = 0;
};

/// Each pair (a, b) is kept when the next std::mt19937_64 output is below
/// floor(p * 2^64); pairs are visited a-major, b ascending. Vertices are then
/// trimmed in index order: a vertex above delta_cap loses its highest-index
/// edges until its degree equals the cap. Output edges are sorted, so the
/// result depends only on the spec.
RawGraph generate(const GenSpec& spec);

}  // namespace eqcolor
