#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eqcolor/engine.hpp"

namespace eqcolor {

struct VerificationReport {
  bool proper = false;            // no edge inside a class
  bool partition = false;         // classes disjoint and covering V
  bool class_count_ok = false;    // exactly k classes
  std::map<Int, Int> size_profile;  // class size -> multiplicity
  bool equitable = false;         // max size - min size <= 1
  bool exact_profile_ok = false;  // sizes in {q, q+1}, exactly r of size q+1

  bool ok() const noexcept { return proper && partition && equitable; }
};

/// Re-checks a cover against the graph without using any engine state.
VerificationReport verify(const BipartiteGraph& g, const Cover& cover, Int k, Int q, Int r);

/// Builds a cover from a per-vertex color list (colors 0..max). Classes are
/// tagged by their content.
Cover cover_from_colors(const BipartiteGraph& g, const std::vector<int>& colors);

struct OracleLimits {
  Vertex max_vertices = 16;
};

/// Smallest k <= k_max admitting an equitable k-coloring, or nullopt (unknown)
/// when none exists in range. Throws TooLarge beyond limits.max_vertices.
std::optional<Int> brute_chi_e(const BipartiteGraph& g, Int k_max, OracleLimits limits = {});

/// Witness with exactly k classes and the forced (q, q+1, r) profile.
std::optional<Cover> brute_equitable_k(const BipartiteGraph& g, Int k, OracleLimits limits = {});

struct NormalTriple {
  Int x = 0;
  Int u = 0;
  Int M = 0;
  auto operator<=>(const NormalTriple&) const = default;
};

/// Every (x, u, M) with a = xq + u + M, 0 <= u <= x <= floor(k/2), u <= r,
/// r - u <= k - x and 0 <= M < q + k, by enumeration.
std::vector<NormalTriple> brute_normal_forms(Int a, Int q, Int k, Int r);

}  // namespace eqcolor
