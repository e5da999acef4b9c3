#include <doctest.h>

#include <sstream>

#include "eqcolor/bench.hpp"
#include "eqcolor/generator.hpp"
#include "eqcolor/io.hpp"
#include "fixtures.hpp"

using namespace eqcolor;
using namespace eqcolor::testing;

TEST_CASE("edge list reader") {
  std::istringstream in("4 3\n0 1\n1 2\n\n2 3\n");
  auto g = read_edge_list(in);
  CHECK(g.n == 4);
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  std::istringstream wrong_count("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(wrong_count), ParseError);
  std::istringstream out_of_range("3 1\n0 3\n");
  CHECK_THROWS_AS(read_edge_list(out_of_range), ParseError);
  std::istringstream junk("3 1\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(junk), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), ParseError);
}

TEST_CASE("duplicate edges: error by default, dropped with a warning on request") {
  const std::string text = "3 3\n0 1\n1 0\n1 2\n";
  std::istringstream strict(text);
  CHECK_THROWS_AS(read_edge_list(strict), ParseError);

  std::istringstream lenient(text);
  std::ostringstream warnings;
  auto g = read_edge_list(lenient, ReadOptions{true, &warnings});
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(warnings.str().find("duplicate") != std::string::npos);
}

TEST_CASE("edge list tokens: tabs, CRLF, signs, glued junk") {
  std::istringstream in("3 2\r\n0\t1\r\n +1   2 \n");
  CHECK(read_edge_list(in).edges == std::vector<Edge>{{0, 1}, {1, 2}});
  std::istringstream glued("3 1\n0 1x\n");
  CHECK_THROWS_AS(read_edge_list(glued), ParseError);
  std::istringstream trailing("3 1\n0 1 2\n");
  CHECK_THROWS_AS(read_edge_list(trailing), ParseError);
  std::istringstream lonely("3 1\n0\n");
  CHECK_THROWS_AS(read_edge_list(lonely), ParseError);
}

TEST_CASE("dedup output is lexicographic over normalized pairs") {
  std::istringstream in("5 6\n4 3\n2 0\n1 0\n0 1\n3 1\n2 1\n");
  auto g = read_edge_list(in, ReadOptions{true, nullptr});
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}});
}

TEST_CASE("DIMACS reader converts to 0-based") {
  std::istringstream in("c a star\np edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
  auto g = read_graph(in, GraphFormat::Auto);
  CHECK(g.n == 4);
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});

  std::istringstream dup("p edge 2 2\ne 1 2\ne 2 1\n");
  CHECK_THROWS_AS(read_dimacs(dup), ParseError);
  std::istringstream zero("p edge 2 1\ne 0 1\n");
  CHECK_THROWS_AS(read_dimacs(zero), ParseError);
  std::istringstream no_header("e 1 2\n");
  CHECK_THROWS_AS(read_dimacs(no_header), ParseError);
}

TEST_CASE("auto format detection picks the edge list for numeric input") {
  std::istringstream in("2 1\n0 1\n");
  CHECK(read_graph(in, GraphFormat::Auto).edges.size() == 1);
}

TEST_CASE("edge list writer round-trips") {
  auto raw = star(4);
  std::ostringstream out;
  write_edge_list(out, raw);
  CHECK(out.str() == "5 4\n0 1\n0 2\n0 3\n0 4\n");
  std::istringstream in(out.str());
  CHECK(read_edge_list(in).edges == raw.edges);
}

TEST_CASE("coloring text format") {
  auto g = build_graph(star(5));
  auto res = color_equitably(g, Mode::Theorem);
  const auto& cover = std::get<ColoringSuccess>(res).construction.cover;
  std::ostringstream out;
  write_coloring(out, cover, g.size());
  CHECK(out.str() == "0 0\n1 1\n2 2\n3 2\n4 3\n5 3\n");

  std::istringstream in(out.str());
  auto colors = read_coloring(in, g.size());
  CHECK(colors == cover.colors(g.size()));

  std::istringstream missing("0 0\n1 1\n");
  CHECK_THROWS_AS(read_coloring(missing, 3), ParseError);
  std::istringstream twice("0 0\n0 1\n1 1\n");
  CHECK_THROWS_AS(read_coloring(twice, 2), ParseError);
}

TEST_CASE("structured documents carry the full parameter block") {
  auto g = build_graph(star(5));
  auto res = color_equitably(g, Mode::Theorem);
  const auto& ok = std::get<ColoringSuccess>(res);
  auto rep = verify(g, ok.construction.cover, 4, 1, 2);
  auto doc = coloring_document(g, Mode::Theorem, ok, rep);
  for (const char* key : {"k", "q", "r", "x", "u", "M", "t", "H", "L", "e", "y"})
    CHECK(doc["parameters"].contains(key));
  CHECK(doc["parameters"]["t"] == 1);
  CHECK(doc["classes"].size() == 4);
  CHECK(doc["classes"][0]["kind"] == "A-pure");
  CHECK(doc["verification"]["exact_profile_ok"] == true);

  auto k33 = build_graph(complete_bipartite(3, 3));
  auto bad = std::get<Infeasible>(color_equitably(k33, Mode::BestEffort));
  auto idoc = infeasible_document(Mode::BestEffort, bad);
  CHECK(idoc["status"] == "infeasible");
  CHECK(idoc["feasibility"].size() == 3);
  CHECK(idoc["feasibility"][2]["L"] == -2);
}

TEST_CASE("generator") {
  SUBCASE("p = 0 gives no edges") {
    auto g = generate(GenSpec{10, 20, 5, 0, 1});
    CHECK(g.n == 30);
    CHECK(g.edges.empty());
  }
  SUBCASE("same seed, same bytes; different seed, different graph") {
    GenSpec spec{40, 60, 8, Rational(1, 5), 123};
    std::ostringstream a, b, c;
    write_edge_list(a, generate(spec));
    write_edge_list(b, generate(spec));
    CHECK(a.str() == b.str());
    spec.seed = 124;
    write_edge_list(c, generate(spec));
    CHECK(a.str() != c.str());
  }
  SUBCASE("degree cap holds on both sides") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto raw = generate(GenSpec{30, 40, 5, Rational(7, 10), seed});
      auto g = build_graph(raw);
      CHECK(g.max_degree() <= 5);
      CHECK(g.max_degree() == 5);  // dense enough to reach the cap
    }
  }
  SUBCASE("p = 1 with a generous cap is complete bipartite") {
    auto raw = generate(GenSpec{3, 4, 10, 1, 9});
    CHECK(raw.edges.size() == 12);
  }
  SUBCASE("trimming drops the highest-index edges") {
    auto raw = generate(GenSpec{3, 3, 2, 1, 0});
    // A-vertices keep B 3,4; then B-vertices 3 and 4 drop their edge to A-vertex 2
    CHECK(raw.edges == std::vector<Edge>{{0, 3}, {0, 4}, {1, 3}, {1, 4}});
  }
  CHECK_THROWS_AS(generate(GenSpec{3, 3, 2, Rational(3, 2), 0}), PreconditionViolation);
}

TEST_CASE("bench") {
  std::ostringstream out;
  write_bench_csv(out, run_bench(BenchOptions{}));
  CHECK(out.str() == "n,m,delta,wall_time_ns,edge_scans,outcome\n");

  BenchOptions opts;
  opts.sizes = {800, 1600};
  opts.repeats = 1;
  auto records = run_bench(opts);
  REQUIRE(records.size() == 2);
  for (const auto& r : records) {
    CHECK(r.outcome == "ok");
    CHECK(r.delta <= r.n / 21);
    CHECK(r.edge_scans <= static_cast<std::uint64_t>(r.m + r.t * r.b));
  }
}
