#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqcolor/engine.hpp"
#include "eqcolor/verify.hpp"

namespace eqcolor {

enum class GraphFormat { Auto, EdgeList, Dimacs };

struct ReadOptions {
  /// Drop repeated edges with a warning instead of failing.
  bool dedup = false;
  std::ostream* warnings = nullptr;
};

/// `n m` header then m lines `u v`, 0-based.
RawGraph read_edge_list(std::istream& in, const ReadOptions& opts = {});

/// DIMACS: `c` comments, `p edge n m`, `e u v` with 1-based vertices.
RawGraph read_dimacs(std::istream& in, const ReadOptions& opts = {});

/// Auto picks DIMACS when the first token is `c` or `p`.
RawGraph read_graph(std::istream& in, GraphFormat format, const ReadOptions& opts = {});
RawGraph read_graph_file(const std::filesystem::path& path, GraphFormat format,
                         const ReadOptions& opts = {});

void write_edge_list(std::ostream& out, const RawGraph& graph);

/// `vertex color` lines; every vertex 0..n-1 must appear exactly once.
std::vector<int> read_coloring(std::istream& in, Vertex n);
void write_coloring(std::ostream& out, const Cover& cover, Vertex n);

nlohmann::json to_json(const ColoringParameters& params);
nlohmann::json to_json(const NormalizedForm& nf);
nlohmann::json to_json(const FeasibilityReport& report);
nlohmann::json to_json(const VerificationReport& report);

/// Self-describing document: graph sizes, the full parameter block
/// (k, q, r, x, u, M, t, L, H, e, y), the classes and the verification report.
nlohmann::json coloring_document(const BipartiteGraph& g, Mode mode, const ColoringSuccess& ok,
                                 const VerificationReport& verification);
nlohmann::json infeasible_document(Mode mode, const Infeasible& result);

void write_infeasible_text(std::ostream& out, const Infeasible& result);
void write_verification_text(std::ostream& out, const VerificationReport& report);

}  // namespace eqcolor
