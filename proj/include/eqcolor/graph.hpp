#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "eqcolor/error.hpp"

namespace eqcolor {

enum class Side : std::uint8_t { A, B };

using Edge = std::pair<Vertex, Vertex>;

/// Unvalidated input: a vertex count and a list of unordered pairs.
struct RawGraph {
  Vertex n = 0;
  std::vector<Edge> edges;
};

/// Immutable bipartite graph in CSR form with canonical sides (|A| <= |B|).
class BipartiteGraph {
 public:
  Vertex size() const noexcept { return static_cast<Vertex>(side_.size()); }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const noexcept {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const;

  Side side(Vertex v) const noexcept { return side_[v]; }
  std::span<const Side> sides() const noexcept { return side_; }

  /// Vertices of one side in increasing index order.
  std::span<const Vertex> side_vertices(Side s) const noexcept {
    return s == Side::A ? std::span<const Vertex>(a_vertices_) : std::span<const Vertex>(b_vertices_);
  }

  Vertex a() const noexcept { return static_cast<Vertex>(a_vertices_.size()); }
  Vertex b() const noexcept { return static_cast<Vertex>(b_vertices_.size()); }
  Vertex max_degree() const noexcept { return max_degree_; }

  /// Every edge once as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  friend BipartiteGraph build_graph(const RawGraph& raw);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<Side> side_;
  std::vector<Vertex> a_vertices_;
  std::vector<Vertex> b_vertices_;
  Vertex max_degree_ = 0;
};

/// Validates the edge list, finds a bipartition by BFS and canonicalizes the
/// sides. Throws InvalidEdge (self-loop, out of range, duplicate) or OddCycle.
BipartiteGraph build_graph(const RawGraph& raw);

/// Per-vertex BFS 2-coloring (0/1) plus component id; input graphs must be
/// bipartite.
struct ComponentColoring {
  std::vector<std::uint8_t> color;
  std::vector<Vertex> component;
  std::vector<bool> isolated;
};

/// Side assignment from a per-component 2-coloring. In each component the larger
/// color class goes to B; on ties the class holding the smallest index goes to
/// A. Isolated vertices go to B. If the totals end with |A| > |B| the labels
/// are swapped globally.
std::vector<Side> canonicalize_sides(const ComponentColoring& coloring);

}  // namespace eqcolor
