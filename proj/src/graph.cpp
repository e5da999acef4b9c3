#include "eqcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace eqcolor {

OddCycle::OddCycle(std::vector<Vertex> witness)
    : Error("graph is not bipartite: odd cycle of length " + std::to_string(witness.size())),
      witness_(std::move(witness)) {}

bool BipartiteGraph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Odd closed walk through the conflict edge (u, v): u -> lca -> v, closed by vu.
std::vector<Vertex> odd_cycle_witness(const std::vector<Vertex>& parent,
                                      const std::vector<Vertex>& depth, Vertex u, Vertex v) {
  std::vector<Vertex> up, down;
  while (depth[u] > depth[v]) { up.push_back(u); u = parent[u]; }
  while (depth[v] > depth[u]) { down.push_back(v); v = parent[v]; }
  while (u != v) {
    up.push_back(u);
    down.push_back(v);
    u = parent[u];
    v = parent[v];
  }
  up.push_back(u);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace

std::vector<Side> canonicalize_sides(const ComponentColoring& coloring) {
  const auto n = coloring.color.size();
  Vertex num_components = 0;
  for (Vertex c : coloring.component) num_components = std::max(num_components, c + 1);

  // per component: size of color 0, size of color 1, smallest vertex and its color
  struct Tally { std::size_t size[2] = {0, 0}; int first_color = -1; };
  std::vector<Tally> tally(num_components);
  for (std::size_t v = 0; v < n; ++v) {
    auto& t = tally[coloring.component[v]];
    ++t.size[coloring.color[v]];
    if (t.first_color < 0) t.first_color = coloring.color[v];
  }

  std::vector<std::uint8_t> color_for_a(num_components);
  for (Vertex c = 0; c < num_components; ++c) {
    const auto& t = tally[c];
    if (t.size[0] != t.size[1])
      color_for_a[c] = t.size[0] < t.size[1] ? 0 : 1;
    else
      color_for_a[c] = static_cast<std::uint8_t>(t.first_color);
  }

  std::vector<Side> side(n, Side::B);
  std::size_t a = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (coloring.isolated[v]) continue;
    if (coloring.color[v] == color_for_a[coloring.component[v]]) {
      side[v] = Side::A;
      ++a;
    }
  }
  if (2 * a > n)
    for (auto& s : side) s = s == Side::A ? Side::B : Side::A;
  return side;
}

BipartiteGraph build_graph(const RawGraph& raw) {
  if (raw.n < 1) throw InvalidEdge("graph must have at least one vertex");
  const Vertex n = raw.n;

  std::vector<std::size_t> degree(n + 1, 0);
  for (auto [u, v] : raw.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidEdge("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  BipartiteGraph g;
  g.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(g.offsets_[n]);
  {
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : raw.edges) {
      g.neighbors_[fill[u]++] = v;
      g.neighbors_[fill[v]++] = u;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    if (!std::is_sorted(first, last)) std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw InvalidEdge("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    g.max_degree_ = std::max(g.max_degree_, static_cast<Vertex>(last - first));
  }

  ComponentColoring cc;
  cc.color.assign(n, 0);
  cc.component.assign(n, -1);
  cc.isolated.assign(n, false);
  std::vector<Vertex> parent(n, -1), depth(n, 0);
  Vertex component = 0;
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < n; ++root) {
    if (cc.component[root] >= 0) continue;
    cc.component[root] = component;
    cc.isolated[root] = g.degree(root) == 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(u)) {
        if (cc.component[w] < 0) {
          cc.component[w] = component;
          cc.color[w] = cc.color[u] ^ 1;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          frontier.push(w);
        } else if (cc.color[w] == cc.color[u]) {
          throw OddCycle(odd_cycle_witness(parent, depth, u, w));
        }
      }
    }
    ++component;
  }

  g.side_ = canonicalize_sides(cc);
  for (Vertex v = 0; v < n; ++v)
    (g.side_[v] == Side::A ? g.a_vertices_ : g.b_vertices_).push_back(v);
  return g;
}

}  // namespace eqcolor
