#include "eqcolor/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace eqcolor {

namespace {

// Buckets edges by smaller endpoint (counting sort), so the result is in
// lexicographic order without a global comparison sort.
void dedup_edges(RawGraph& g, const ReadOptions& opts) {
  std::vector<std::size_t> start(static_cast<std::size_t>(g.n) + 1, 0);
  for (auto [u, v] : g.edges) ++start[static_cast<std::size_t>(std::min(u, v)) + 1];
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.n); ++i) start[i + 1] += start[i];
  std::vector<Edge> sorted(g.edges.size());
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (auto [u, v] : g.edges) sorted[fill[std::min(u, v)]++] = {std::min(u, v), std::max(u, v)};
  }
  bool found = false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(g.n); ++i) {
    const auto first = sorted.begin() + static_cast<std::ptrdiff_t>(start[i]);
    const auto last = sorted.begin() + static_cast<std::ptrdiff_t>(start[i + 1]);
    if (!std::is_sorted(first, last)) std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      if (!opts.dedup)
        throw ParseError("duplicate edge (" + std::to_string(dup->first) + ", " +
                         std::to_string(dup->second) + ")");
      found = true;
    }
  }
  if (!found) return;
  const auto before = sorted.size();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (opts.warnings)
    *opts.warnings << "warning: dropped " << before - sorted.size() << " duplicate edge(s)\n";
  g.edges = std::move(sorted);
}

// Whitespace-separated tokens of one line.
class Fields {
 public:
  explicit Fields(std::string_view line) : rest_(line) {}

  bool next(std::string_view& token) {
    const auto begin = rest_.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return false;
    const auto end = std::min(rest_.find_first_of(" \t\r", begin), rest_.size());
    token = rest_.substr(begin, end - begin);
    rest_.remove_prefix(end);
    return true;
  }

  bool next_int(long long& value, std::size_t lineno) {
    std::string_view token;
    if (!next(token)) return false;
    if (token.size() > 1 && token.front() == '+') token.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got `" +
                       std::string(token) + "`");
    return true;
  }

 private:
  std::string_view rest_;
};

Vertex to_vertex(long long value, const std::string& where) {
  if (value < 0 || value > std::numeric_limits<Vertex>::max())
    throw ParseError(where + ": value " + std::to_string(value) + " out of range");
  return static_cast<Vertex>(value);
}

void check_endpoint(long long v, Vertex n, std::size_t line) {
  if (v < 0 || v >= n)
    throw ParseError("line " + std::to_string(line) + ": vertex " + std::to_string(v) +
                     " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

RawGraph read_edge_list(std::istream& in, const ReadOptions& opts) {
  RawGraph g;
  std::string line;
  std::size_t lineno = 0;
  long long m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    Fields fields(line);
    long long x, y;
    if (!fields.next_int(x, lineno)) continue;  // blank line
    if (!fields.next_int(y, lineno))
      throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
    std::string_view extra;
    if (fields.next(extra)) throw ParseError("line " + std::to_string(lineno) + ": trailing data");
    if (m < 0) {
      g.n = to_vertex(x, "header");
      m = y;
      if (m < 0) throw ParseError("header: negative edge count");
      g.edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    check_endpoint(x, g.n, lineno);
    check_endpoint(y, g.n, lineno);
    g.edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  }
  if (m < 0) throw ParseError("missing `n m` header");
  if (static_cast<long long>(g.edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(g.edges.size()));
  dedup_edges(g, opts);
  return g;
}

RawGraph read_dimacs(std::istream& in, const ReadOptions& opts) {
  RawGraph g;
  std::string line;
  std::size_t lineno = 0;
  long long m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    Fields fields(line);
    std::string_view tag;
    if (!fields.next(tag) || tag == "c") continue;
    if (tag == "p") {
      std::string_view kind;
      long long n;
      if (m >= 0) throw ParseError("line " + std::to_string(lineno) + ": second `p` line");
      if (!fields.next(kind) || (kind != "edge" && kind != "col") || !fields.next_int(n, lineno) ||
          !fields.next_int(m, lineno))
        throw ParseError("line " + std::to_string(lineno) + ": expected `p edge n m`");
      g.n = to_vertex(n, "p line");
      continue;
    }
    if (tag != "e")
      throw ParseError("line " + std::to_string(lineno) + ": unknown tag `" + std::string(tag) + "`");
    if (m < 0) throw ParseError("line " + std::to_string(lineno) + ": `e` before `p` line");
    long long u, v;
    if (!fields.next_int(u, lineno) || !fields.next_int(v, lineno)) throw ParseError("line " + std::to_string(lineno) + ": expected `e u v`");
    check_endpoint(u - 1, g.n, lineno);
    check_endpoint(v - 1, g.n, lineno);
    g.edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (m < 0) throw ParseError("missing `p edge n m` line");
  if (static_cast<long long>(g.edges.size()) != m && opts.warnings)
    *opts.warnings << "warning: `p` line announces " << m << " edges, found " << g.edges.size() << "\n";
  dedup_edges(g, opts);
  return g;
}

RawGraph read_graph(std::istream& in, GraphFormat format, const ReadOptions& opts) {
  if (format == GraphFormat::Auto) {
    in >> std::ws;
    const int first = in.peek();
    format = (first == 'c' || first == 'p') ? GraphFormat::Dimacs : GraphFormat::EdgeList;
  }
  return format == GraphFormat::Dimacs ? read_dimacs(in, opts) : read_edge_list(in, opts);
}

RawGraph read_graph_file(const std::filesystem::path& path, GraphFormat format,
                         const ReadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_graph(in, format, opts);
}

void write_edge_list(std::ostream& out, const RawGraph& graph) {
  out << graph.n << ' ' << graph.edges.size() << '\n';
  for (auto [u, v] : graph.edges) out << u << ' ' << v << '\n';
}

std::vector<int> read_coloring(std::istream& in, Vertex n) {
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Fields fields(line);
    long long v, c;
    if (!fields.next_int(v, lineno)) continue;
    if (!fields.next_int(c, lineno)) throw ParseError("coloring line " + std::to_string(lineno) + ": missing color");
    check_endpoint(v, n, lineno);
    if (c < 0 || c > std::numeric_limits<int>::max())
      throw ParseError("coloring line " + std::to_string(lineno) + ": invalid color");
    if (colors[v] >= 0)
      throw ParseError("coloring line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                       " colored twice");
    colors[v] = static_cast<int>(c);
  }
  for (Vertex v = 0; v < n; ++v)
    if (colors[v] < 0) throw ParseError("coloring misses vertex " + std::to_string(v));
  return colors;
}

void write_coloring(std::ostream& out, const Cover& cover, Vertex n) {
  const auto colors = cover.colors(n);
  for (Vertex v = 0; v < n; ++v) out << v << ' ' << colors[v] << '\n';
}

nlohmann::json to_json(const ColoringParameters& p) {
  return {{"delta", p.delta}, {"k", p.k}, {"q", p.q}, {"r", p.r},
          {"t", p.t},         {"L", p.L}, {"H", p.H}};
}

nlohmann::json to_json(const NormalizedForm& nf) {
  return {{"x", nf.x},
          {"u", nf.u},
          {"M", nf.M},
          {"trace",
           {{"x0", nf.trace.x0},
            {"m0", nf.trace.m0},
            {"l0", nf.trace.l0},
            {"d", nf.trace.d},
            {"branch", to_string(nf.trace.branch)}}}};
}

nlohmann::json to_json(const FeasibilityReport& rep) {
  return {{"t", rep.params.t},
          {"L", rep.params.L},
          {"H", rep.params.H},
          {"r_minus_u_le_k_minus_x", rep.residue_fits},
          {"t_le_k_minus_x", rep.mixed_fits},
          {"H_nonnegative", rep.quota_nonneg},
          {"tH_ge_M", rep.split_fits},
          {"feasible", rep.all()}};
}

nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json profile = nlohmann::json::object();
  for (auto [size, count] : rep.size_profile) profile[std::to_string(size)] = count;
  return {{"proper", rep.proper},
          {"partition", rep.partition},
          {"class_count_ok", rep.class_count_ok},
          {"equitable", rep.equitable},
          {"exact_profile_ok", rep.exact_profile_ok},
          {"size_profile", profile}};
}

nlohmann::json coloring_document(const BipartiteGraph& g, Mode mode, const ColoringSuccess& ok,
                                 const VerificationReport& verification) {
  auto params = to_json(ok.params);
  params["x"] = ok.nf.x;
  params["u"] = ok.nf.u;
  params["M"] = ok.nf.M;
  params["e"] = ok.construction.e;
  params["y"] = ok.construction.y;

  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : ok.construction.cover.classes)
    classes.push_back({{"kind", to_string(c.kind)}, {"vertices", c.vertices}});

  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : ok.reports) reports.push_back(to_json(r));

  return {{"status", "ok"},
          {"mode", to_string(mode)},
          {"graph", {{"n", g.size()}, {"m", g.num_edges()}, {"a", g.a()}, {"b", g.b()},
                     {"delta", g.max_degree()}}},
          {"parameters", params},
          {"normalized_form", to_json(ok.nf)},
          {"feasibility", reports},
          {"edge_scans", ok.construction.stats.edge_scans},
          {"classes", classes},
          {"verification", to_json(verification)}};
}

nlohmann::json infeasible_document(Mode mode, const Infeasible& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  return {{"status", "infeasible"},
          {"mode", to_string(mode)},
          {"graph", {{"n", result.sizes.n}, {"a", result.sizes.a}, {"b", result.sizes.b},
                     {"delta", result.sizes.delta}}},
          {"normalized_form", to_json(result.nf)},
          {"feasibility", reports}};
}

void write_infeasible_text(std::ostream& out, const Infeasible& result) {
  const auto& nf = result.nf;
  out << "infeasible: n=" << result.sizes.n << " a=" << result.sizes.a << " b=" << result.sizes.b
      << " delta=" << result.sizes.delta << " x=" << nf.x << " u=" << nf.u << " M=" << nf.M << '\n';
  for (const auto& r : result.reports) {
    const auto& p = r.params;
    out << "t=" << p.t << " k=" << p.k << " q=" << p.q << " r=" << p.r << " L=" << p.L
        << " H=" << p.H << " r-u<=k-x:" << r.residue_fits << " t<=k-x:" << r.mixed_fits
        << " H>=0:" << r.quota_nonneg << " tH>=M:" << r.split_fits << '\n';
  }
}

void write_verification_text(std::ostream& out, const VerificationReport& rep) {
  out << "proper " << rep.proper << '\n'
      << "partition " << rep.partition << '\n'
      << "class_count_ok " << rep.class_count_ok << '\n'
      << "equitable " << rep.equitable << '\n'
      << "exact_profile_ok " << rep.exact_profile_ok << '\n'
      << "size_profile";
  for (auto [size, count] : rep.size_profile) out << ' ' << size << 'x' << count;
  out << '\n';
}

}  // namespace eqcolor
