#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "eqcolor/graph.hpp"

namespace eqcolor {

using Int = std::int64_t;

enum class Mode { Theorem, BestEffort };

enum class ClassKind : std::uint8_t { APure, Mixed, BPure };

struct ColorClass {
  ClassKind kind = ClassKind::BPure;
  std::vector<Vertex> vertices;  // increasing
};

/// k classes of size q or q+1, exactly r of size q+1.
struct Cover {
  std::vector<ColorClass> classes;
  Int q = 0;
  Int r = 0;

  /// Color (class index) of every vertex; -1 where uncovered.
  std::vector<int> colors(Vertex n) const;
};

/// k = ceil(delta/2) + 1, n = k*q + r with 0 <= r < k.
struct ProfileParameters {
  Int k = 0;
  Int q = 0;
  Int r = 0;
};

ProfileParameters derive_parameters(Int n, Int delta);

/// Sizes of the graph that the parameter computations depend on.
struct GraphSizes {
  Int n = 0;
  Int a = 0;
  Int b = 0;
  Int delta = 0;

  static GraphSizes of(const BipartiteGraph& g);
};

struct ColoringParameters {
  Int delta = 0;
  Int k = 0;
  Int q = 0;
  Int r = 0;
  Int t = 0;
  Int L = 0;  // floor((b - t(q+1)) / (delta-1)), may be negative
  Int H = 0;  // min(q, L)
};

ColoringParameters make_parameters(const GraphSizes& sizes, Int t);

enum class NormalizationBranch : std::uint8_t { Direct, Corrected };

/// a = x*q + u + M with 0 <= u <= x <= floor(k/2), u <= r, r-u <= k-x and
/// 0 <= M < q+k. The trace records the intermediate values of the construction.
struct NormalizedForm {
  Int x = 0;
  Int u = 0;
  Int M = 0;

  struct Trace {
    Int x0 = 0;
    Int m0 = 0;
    Int l0 = 0;
    Int d = 0;
    NormalizationBranch branch = NormalizationBranch::Direct;
  } trace;
};

NormalizedForm normalize(Int a, Int q, Int k, Int r);

/// t balanced parts of M, each at most H, in nonincreasing order.
std::vector<Int> split(Int M, Int t, Int H);

struct FeasibilityReport {
  bool residue_fits = false;    // r - u <= k - x
  bool mixed_fits = false;      // t <= k - x
  bool quota_nonneg = false;    // H >= 0
  bool split_fits = false;      // t*H >= M
  ColoringParameters params;
  NormalizedForm nf;

  bool all() const noexcept { return residue_fits && mixed_fits && quota_nonneg && split_fits; }
};

FeasibilityReport feasibility(const NormalizedForm& nf, const ColoringParameters& params);

struct TSelection {
  std::optional<ColoringParameters> chosen;
  std::vector<FeasibilityReport> reports;  // every t that was tried, in order
};

/// Theorem mode tries only t = floor(k/4). Best-effort mode scans t = 0..k-x
/// and stops at the first all-true report.
TSelection choose_t(const NormalizedForm& nf, const GraphSizes& sizes, Mode mode);

/// Consecutive slices of `vertices`, the count_big classes of size q+1 first.
std::vector<ColorClass> cover_pure(std::span<const Vertex> vertices, Int count_big, Int q,
                                   ClassKind kind);

/// Class built from s_i residual A-vertices and q+1-s_i B-vertices.
struct MixedClass {
  std::vector<Vertex> a_part;
  std::vector<Vertex> b_part;  // increasing
};

/// Elementary inspections made while building the mixed classes: one per
/// neighbor marked plus one per B-vertex examined as a candidate.
struct WorkStats {
  std::uint64_t edge_scans = 0;
};

std::vector<MixedClass> build_mixed_classes(const BipartiteGraph& g, std::span<const Vertex> residual,
                                            std::span<const Int> split, Int q,
                                            WorkStats* stats = nullptr);

struct Rebalanced {
  std::vector<MixedClass> classes;
  std::vector<Vertex> returned;  // increasing
};

/// Keeps the first e classes intact; every other class gives back its
/// highest-index B-vertex.
Rebalanced rebalance(std::vector<MixedClass> mixed, Int e);

struct Construction {
  Cover cover;
  Int e = 0;
  Int y = 0;
  WorkStats stats;
};

/// Three-step construction: A-pure classes on the first xq+u A-vertices, t
/// mixed classes for the rest of A (rebalanced), B-pure classes on what is
/// left of B. Requires an all-true feasibility report for (nf, params).
Construction construct_cover(const BipartiteGraph& g, const NormalizedForm& nf,
                             const ColoringParameters& params);

struct ColoringSuccess {
  Construction construction;
  ColoringParameters params;
  NormalizedForm nf;
  std::vector<FeasibilityReport> reports;
};

struct Infeasible {
  GraphSizes sizes;
  NormalizedForm nf;
  std::vector<FeasibilityReport> reports;
};

using ColoringResult = std::variant<ColoringSuccess, Infeasible>;

/// Equitable (ceil(delta/2)+1)-coloring of g, or the feasibility reports that
/// ruled it out. Throws DegreeTooSmall when delta < 2.
ColoringResult color_equitably(const BipartiteGraph& g, Mode mode);

const char* to_string(Mode mode) noexcept;
const char* to_string(ClassKind kind) noexcept;
const char* to_string(NormalizationBranch branch) noexcept;

}  // namespace eqcolor
