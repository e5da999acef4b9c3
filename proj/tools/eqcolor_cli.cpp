// eqcolor: equitable (ceil(delta/2)+1)-colorings of bipartite graphs.
//
// Exit codes: 0 success, 1 input error, 2 infeasible, 3 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "eqcolor/bench.hpp"
#include "eqcolor/constants.hpp"
#include "eqcolor/generator.hpp"
#include "eqcolor/io.hpp"
#include "eqcolor/verify.hpp"

namespace {

using namespace eqcolor;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInfeasible = 2;
constexpr int kVerifyFailed = 3;

struct GraphInput {
  std::string path;
  std::string format = "auto";
  bool dedup = false;

  BipartiteGraph load() const {
    static const std::map<std::string, GraphFormat> formats{
        {"auto", GraphFormat::Auto}, {"edgelist", GraphFormat::EdgeList}, {"dimacs", GraphFormat::Dimacs}};
    ReadOptions opts;
    opts.dedup = dedup;
    opts.warnings = &std::cerr;
    return build_graph(read_graph_file(path, formats.at(format), opts));
  }

  void add_to(CLI::App* cmd, const char* what) {
    cmd->add_option("graph", path, what)->required()->check(CLI::ExistingFile);
    cmd->add_option("--input-format", format, "Graph file format")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
    cmd->add_flag("--dedup", dedup, "Drop duplicate edges with a warning instead of failing");
  }
};

// Writes to `path`, or stdout when it is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  fn(out);
}

int report_input_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  if (const auto* odd = dynamic_cast<const OddCycle*>(&e)) {
    std::cerr << "odd cycle:";
    for (Vertex v : odd->witness()) std::cerr << ' ' << v;
    std::cerr << '\n';
  }
  return kInputError;
}

Mode parse_mode(const std::string& s) { return s == "theorem" ? Mode::Theorem : Mode::BestEffort; }

int cmd_color(const GraphInput& input, const std::string& mode_name, const std::string& format,
              const std::string& output) {
  const auto g = input.load();
  const Mode mode = parse_mode(mode_name);
  const auto result = color_equitably(g, mode);

  if (const auto* bad = std::get_if<Infeasible>(&result)) {
    with_output(output, [&](std::ostream& out) {
      if (format == "json")
        out << infeasible_document(mode, *bad).dump(2) << '\n';
      else
        write_infeasible_text(out, *bad);
    });
    return kInfeasible;
  }

  const auto& ok = std::get<ColoringSuccess>(result);
  const auto& cover = ok.construction.cover;
  const auto report = verify(g, cover, ok.params.k, ok.params.q, ok.params.r);
  if (!(report.ok() && report.class_count_ok && report.exact_profile_ok)) {
    std::cerr << "error: constructed coloring failed verification\n";
    write_verification_text(std::cerr, report);
    return kVerifyFailed;
  }
  with_output(output, [&](std::ostream& out) {
    if (format == "json")
      out << coloring_document(g, mode, ok, report).dump(2) << '\n';
    else
      write_coloring(out, cover, g.size());
  });
  return kOk;
}

int cmd_verify(const GraphInput& input, const std::string& coloring_path) {
  const auto g = input.load();
  std::ifstream in(coloring_path);
  if (!in) throw ParseError("cannot open " + coloring_path);
  const auto colors = read_coloring(in, g.size());
  const auto cover = cover_from_colors(g, colors);
  const auto k = static_cast<Int>(cover.classes.size());
  const auto report = verify(g, cover, k, cover.q, cover.r);
  std::cout << "classes " << k << '\n';
  write_verification_text(std::cout, report);
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_chie(const GraphInput& input, Int k_max, Vertex limit) {
  const auto g = input.load();
  const auto chi = brute_chi_e(g, k_max, OracleLimits{limit});
  if (chi)
    std::cout << *chi << '\n';
  else
    std::cout << "unknown\n";
  return kOk;
}

int cmd_constants(const std::string& zeta_text) {
  const auto c = compute_constants(parse_rational(zeta_text));
  std::cout << "zeta " << to_string(c.zeta) << '\n'
            << "K0 " << c.K0 << '\n'
            << "K " << c.K << '\n'
            << "c " << c.c << '\n';
  return kOk;
}

int cmd_gen(Vertex n_a, Vertex n_b, Vertex cap, const std::string& p, std::uint64_t seed,
            const std::string& output) {
  GenSpec spec{n_a, n_b, cap, parse_rational(p), seed};
  const auto raw = generate(spec);
  with_output(output, [&](std::ostream& out) { write_edge_list(out, raw); });
  return kOk;
}

std::vector<Int> parse_sizes(const std::string& list) {
  std::vector<Int> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      sizes.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParseError("invalid size `" + item + "`");
    }
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equitable (ceil(delta/2)+1)-colorings of bipartite graphs"};
  app.require_subcommand(1);

  GraphInput color_in;
  std::string mode = "best-effort", format = "text", color_out;
  auto* color = app.add_subcommand("color", "Construct an equitable coloring");
  color_in.add_to(color, "Input graph (edge list or DIMACS)");
  color->add_option("--mode", mode, "Parameter selection")->check(CLI::IsMember({"theorem", "best-effort"}));
  color->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  color->add_option("-o,--output", color_out, "Output path (default stdout)");

  GraphInput verify_in;
  std::string coloring_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a graph");
  verify_in.add_to(verify_cmd, "Graph file");
  verify_cmd->add_option("coloring", coloring_path, "`vertex color` lines")->required();

  GraphInput chie_in;
  Int k_max = std::numeric_limits<Vertex>::max();
  Vertex limit = 16;
  auto* chie = app.add_subcommand("chie", "Exact equitable chromatic number by backtracking");
  chie_in.add_to(chie, "Graph file");
  chie->add_option("--kmax", k_max, "Largest k to try");
  chie->add_option("--limit", limit, "Largest vertex count accepted (at most 64)");

  std::string zeta_text;
  auto* constants = app.add_subcommand("constants", "Print K0, K and c for a rational zeta > 41/2");
  constants->add_option("zeta", zeta_text, "e.g. 21 or 41/2+1/10")->required();

  Vertex n_a = 0, n_b = 0, cap = 0;
  std::string p = "0", gen_out;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Write a random bipartite edge list");
  gen->add_option("--na", n_a, "Size of the first side")->required();
  gen->add_option("--nb", n_b, "Size of the second side")->required();
  gen->add_option("--delta-cap", cap, "Maximum degree bound")->required();
  gen->add_option("--p", p, "Edge probability, rational in [0, 1]")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  std::string sizes = "10000,20000,40000", bench_zeta = "21", bench_mode = "best-effort", bench_out;
  std::uint64_t bench_seed = 1;
  int repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time the pipeline over a list of sizes, CSV output");
  bench->add_option("--sizes", sizes, "Comma-separated vertex counts");
  bench->add_option("--zeta", bench_zeta, "Ratio n / delta of the generated instances");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--mode", bench_mode, "Parameter selection")
      ->check(CLI::IsMember({"theorem", "best-effort"}));
  bench->add_option("--repeats", repeats, "Timing repeats per size (minimum is reported)");
  bench->add_option("-o,--output", bench_out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*color) return cmd_color(color_in, mode, format, color_out);
    if (*verify_cmd) return cmd_verify(verify_in, coloring_path);
    if (*chie) return cmd_chie(chie_in, k_max, limit);
    if (*constants) return cmd_constants(zeta_text);
    if (*gen) return cmd_gen(n_a, n_b, cap, p, seed, gen_out);
    if (*bench) {
      BenchOptions opts;
      opts.sizes = parse_sizes(sizes);
      opts.zeta = parse_rational(bench_zeta);
      opts.seed = bench_seed;
      opts.mode = parse_mode(bench_mode);
      opts.repeats = repeats;
      const auto records = run_bench(opts);
      with_output(bench_out, [&](std::ostream& out) { write_bench_csv(out, records); });
      return kOk;
    }
  } catch (const Error& e) {
    return report_input_error(e);
  }
  return kInputError;
}
