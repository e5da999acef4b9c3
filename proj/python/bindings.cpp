#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqcolor/constants.hpp"
#include "eqcolor/engine.hpp"
#include "eqcolor/generator.hpp"
#include "eqcolor/verify.hpp"

namespace py = pybind11;
using namespace eqcolor;

namespace {

BipartiteGraph make_graph(Vertex n, const std::vector<Edge>& edges) {
  return build_graph(RawGraph{n, edges});
}

Mode parse_mode(const std::string& mode) {
  if (mode == "theorem") return Mode::Theorem;
  if (mode == "best-effort" || mode == "best_effort") return Mode::BestEffort;
  throw py::value_error("mode must be 'theorem' or 'best-effort'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equitable (ceil(delta/2)+1)-colorings of bipartite graphs.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidEdge>(m, "InvalidEdge", error.ptr());
  py::register_exception<OddCycle>(m, "OddCycle", error.ptr());
  py::register_exception<DegreeTooSmall>(m, "DegreeTooSmall", error.ptr());
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", error.ptr());
  py::register_exception<InfeasibleSplit>(m, "InfeasibleSplit", error.ptr());
  py::register_exception<SizeMismatch>(m, "SizeMismatch", error.ptr());
  py::register_exception<ZetaTooSmall>(m, "ZetaTooSmall", error.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<BipartiteGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &BipartiteGraph::size)
      .def_property_readonly("m", &BipartiteGraph::num_edges)
      .def_property_readonly("a", &BipartiteGraph::a)
      .def_property_readonly("b", &BipartiteGraph::b)
      .def_property_readonly("max_degree", &BipartiteGraph::max_degree)
      .def("sides", [](const BipartiteGraph& g) {
        std::string s;
        for (Side side : g.sides()) s.push_back(side == Side::A ? 'A' : 'B');
        return s;
      })
      .def("neighbors", [](const BipartiteGraph& g, Vertex v) {
        if (v < 0 || v >= g.size()) throw py::index_error("vertex out of range");
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("edges", &BipartiteGraph::edges);

  py::class_<NormalizedForm>(m, "NormalizedForm")
      .def_readonly("x", &NormalizedForm::x)
      .def_readonly("u", &NormalizedForm::u)
      .def_readonly("M", &NormalizedForm::M)
      .def_property_readonly("branch", [](const NormalizedForm& nf) { return to_string(nf.trace.branch); })
      .def_property_readonly("trace", [](const NormalizedForm& nf) {
        return py::dict(py::arg("x0") = nf.trace.x0, py::arg("m0") = nf.trace.m0,
                        py::arg("l0") = nf.trace.l0, py::arg("d") = nf.trace.d);
      });

  py::class_<ColoringParameters>(m, "ColoringParameters")
      .def_readonly("delta", &ColoringParameters::delta)
      .def_readonly("k", &ColoringParameters::k)
      .def_readonly("q", &ColoringParameters::q)
      .def_readonly("r", &ColoringParameters::r)
      .def_readonly("t", &ColoringParameters::t)
      .def_readonly("L", &ColoringParameters::L)
      .def_readonly("H", &ColoringParameters::H);

  py::class_<FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("residue_fits", &FeasibilityReport::residue_fits)
      .def_readonly("mixed_fits", &FeasibilityReport::mixed_fits)
      .def_readonly("quota_nonneg", &FeasibilityReport::quota_nonneg)
      .def_readonly("split_fits", &FeasibilityReport::split_fits)
      .def_readonly("params", &FeasibilityReport::params)
      .def("all", &FeasibilityReport::all);

  py::class_<Cover>(m, "Cover")
      .def_property_readonly("classes", [](const Cover& c) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& cls : c.classes) out.push_back(cls.vertices);
        return out;
      })
      .def_property_readonly("kinds", [](const Cover& c) {
        std::vector<std::string> out;
        for (const auto& cls : c.classes) out.emplace_back(to_string(cls.kind));
        return out;
      })
      .def_readonly("q", &Cover::q)
      .def_readonly("r", &Cover::r)
      .def("colors", &Cover::colors, py::arg("n"));

  py::class_<ColoringSuccess>(m, "Coloring")
      .def_property_readonly("cover", [](const ColoringSuccess& s) { return s.construction.cover; })
      .def_readonly("params", &ColoringSuccess::params)
      .def_readonly("normalized_form", &ColoringSuccess::nf)
      .def_property_readonly("e", [](const ColoringSuccess& s) { return s.construction.e; })
      .def_property_readonly("y", [](const ColoringSuccess& s) { return s.construction.y; })
      .def_property_readonly("edge_scans", [](const ColoringSuccess& s) { return s.construction.stats.edge_scans; });

  py::class_<Infeasible>(m, "Infeasible")
      .def_readonly("normalized_form", &Infeasible::nf)
      .def_readonly("reports", &Infeasible::reports);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("proper", &VerificationReport::proper)
      .def_readonly("partition", &VerificationReport::partition)
      .def_readonly("class_count_ok", &VerificationReport::class_count_ok)
      .def_readonly("equitable", &VerificationReport::equitable)
      .def_readonly("exact_profile_ok", &VerificationReport::exact_profile_ok)
      .def_readonly("size_profile", &VerificationReport::size_profile)
      .def("ok", &VerificationReport::ok);

  py::class_<ConstantsResult>(m, "Constants")
      .def_property_readonly("zeta", [](const ConstantsResult& c) { return to_string(c.zeta); })
      .def_readonly("K0", &ConstantsResult::K0)
      .def_readonly("K", &ConstantsResult::K)
      .def_readonly("c", &ConstantsResult::c);

  m.def("derive_parameters", [](Int n, Int delta) {
    auto p = derive_parameters(n, delta);
    return py::make_tuple(p.k, p.q, p.r);
  }, py::arg("n"), py::arg("delta"), "(k, q, r) with k = ceil(delta/2)+1 and n = kq + r.");
  m.def("normalize", &normalize, py::arg("a"), py::arg("q"), py::arg("k"), py::arg("r"));
  m.def("split", &split, py::arg("M"), py::arg("t"), py::arg("H"));
  m.def("color_equitably", [](const BipartiteGraph& g, const std::string& mode) -> py::object {
    auto result = color_equitably(g, parse_mode(mode));
    if (auto* ok = std::get_if<ColoringSuccess>(&result)) return py::cast(std::move(*ok));
    return py::cast(std::get<Infeasible>(std::move(result)));
  }, py::arg("graph"), py::arg("mode") = "best-effort",
        "Returns a Coloring, or an Infeasible carrying the feasibility reports.");
  m.def("verify", &verify, py::arg("graph"), py::arg("cover"), py::arg("k"), py::arg("q"), py::arg("r"));
  m.def("verify_colors", [](const BipartiteGraph& g, const std::vector<int>& colors) {
    auto cover = cover_from_colors(g, colors);
    return verify(g, cover, static_cast<Int>(cover.classes.size()), cover.q, cover.r);
  }, py::arg("graph"), py::arg("colors"));
  m.def("compute_constants", [](const std::string& zeta) { return compute_constants(parse_rational(zeta)); },
        py::arg("zeta"));
  m.def("hypotheses_hold", [](const BipartiteGraph& g, const std::string& zeta) {
    return hypotheses_hold(g, parse_rational(zeta));
  }, py::arg("graph"), py::arg("zeta"));
  m.def("brute_chi_e", [](const BipartiteGraph& g, Int k_max, Vertex limit) {
    return brute_chi_e(g, k_max, OracleLimits{limit});
  }, py::arg("graph"), py::arg("k_max") = 64, py::arg("limit") = 16);
  m.def("brute_equitable_k", [](const BipartiteGraph& g, Int k, Vertex limit) {
    return brute_equitable_k(g, k, OracleLimits{limit});
  }, py::arg("graph"), py::arg("k"), py::arg("limit") = 16);
  m.def("brute_normal_forms", [](Int a, Int q, Int k, Int r) {
    std::vector<std::tuple<Int, Int, Int>> out;
    for (auto t : brute_normal_forms(a, q, k, r)) out.emplace_back(t.x, t.u, t.M);
    return out;
  }, py::arg("a"), py::arg("q"), py::arg("k"), py::arg("r"));
  m.def("generate", [](Vertex n_a, Vertex n_b, Vertex delta_cap, const std::string& p, std::uint64_t seed) {
    auto raw = generate(GenSpec{n_a, n_b, delta_cap, parse_rational(p), seed});
    return py::make_tuple(raw.n, raw.edges);
  }, py::arg("n_a"), py::arg("n_b"), py::arg("delta_cap"), py::arg("p"), py::arg("seed") = 1,
        "Returns (n, edges) of a seeded random bipartite graph.");
}
