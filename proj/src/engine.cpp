#include "eqcolor/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eqcolor {

namespace {

Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(Int num, Int den) { return -floor_div(-num, den); }

}  // namespace

std::vector<int> Cover::colors(Vertex n) const {
  std::vector<int> color(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex v : classes[c].vertices)
      if (v >= 0 && v < n) color[v] = static_cast<int>(c);
  return color;
}

ProfileParameters derive_parameters(Int n, Int delta) {
  if (delta < 2) throw DegreeTooSmall("maximum degree " + std::to_string(delta) + " < 2");
  ProfileParameters p;
  p.k = (delta + 1) / 2 + 1;
  if (n < p.k)
    throw PreconditionViolation("n = " + std::to_string(n) + " is smaller than k = " + std::to_string(p.k));
  p.q = n / p.k;
  p.r = n - p.k * p.q;
  return p;
}

GraphSizes GraphSizes::of(const BipartiteGraph& g) {
  return {g.size(), g.a(), g.b(), g.max_degree()};
}

ColoringParameters make_parameters(const GraphSizes& sizes, Int t) {
  auto profile = derive_parameters(sizes.n, sizes.delta);
  ColoringParameters p;
  p.delta = sizes.delta;
  p.k = profile.k;
  p.q = profile.q;
  p.r = profile.r;
  p.t = t;
  p.L = floor_div(sizes.b - t * (p.q + 1), sizes.delta - 1);
  p.H = std::min(p.q, p.L);
  return p;
}

NormalizedForm normalize(Int a, Int q, Int k, Int r) {
  if (q < 1) throw PreconditionViolation("normalize: q must be positive");
  if (r < 0 || r >= k) throw PreconditionViolation("normalize: need 0 <= r < k");
  if (a < 0 || a > (k * q + r) / 2)
    throw PreconditionViolation("normalize: |A| = " + std::to_string(a) + " exceeds floor(n/2)");

  NormalizedForm nf;
  auto& tr = nf.trace;
  tr.x0 = std::min(a / q, k / 2);
  tr.m0 = a - tr.x0 * q;
  tr.l0 = std::max<Int>(0, tr.x0 + r - k);
  if (tr.m0 >= tr.l0) {
    tr.branch = NormalizationBranch::Direct;
    nf.x = tr.x0;
    nf.u = tr.l0;
    nf.M = tr.m0 - tr.l0;
  } else {
    tr.branch = NormalizationBranch::Corrected;
    tr.d = ceil_div(tr.l0 - tr.m0, q + 1);
    nf.x = tr.x0 - tr.d;
    nf.u = tr.l0 - tr.d;
    nf.M = tr.m0 - tr.l0 + tr.d * (q + 1);
  }
  return nf;
}

std::vector<Int> split(Int M, Int t, Int H) {
  if (t < 1 || M < 0 || H < 0) throw PreconditionViolation("split: need t >= 1, M >= 0, H >= 0");
  if (M > t * H)
    throw InfeasibleSplit("split: M = " + std::to_string(M) + " exceeds t*H = " + std::to_string(t * H));
  const Int Q = M / t;
  const Int R = M % t;
  std::vector<Int> s(static_cast<std::size_t>(t), Q);
  std::fill_n(s.begin(), R, Q + 1);
  return s;
}

FeasibilityReport feasibility(const NormalizedForm& nf, const ColoringParameters& params) {
  FeasibilityReport rep;
  rep.params = params;
  rep.nf = nf;
  rep.residue_fits = params.r - nf.u <= params.k - nf.x;
  rep.mixed_fits = params.t <= params.k - nf.x;
  rep.quota_nonneg = params.H >= 0;
  rep.split_fits = params.t * params.H >= nf.M;
  return rep;
}

TSelection choose_t(const NormalizedForm& nf, const GraphSizes& sizes, Mode mode) {
  TSelection sel;
  auto attempt = [&](Int t) {
    auto params = make_parameters(sizes, t);
    sel.reports.push_back(feasibility(nf, params));
    if (sel.reports.back().all()) sel.chosen = params;
    return sel.chosen.has_value();
  };

  const Int k = derive_parameters(sizes.n, sizes.delta).k;
  if (mode == Mode::Theorem) {
    attempt(k / 4);
  } else {
    for (Int t = 0; t <= k - nf.x; ++t)
      if (attempt(t)) break;
  }
  return sel;
}

std::vector<ColorClass> cover_pure(std::span<const Vertex> vertices, Int count_big, Int q,
                                   ClassKind kind) {
  if (q < 1 || count_big < 0) throw PreconditionViolation("cover_pure: need q >= 1, count_big >= 0");
  const Int total = static_cast<Int>(vertices.size());
  const Int rest = total - count_big * (q + 1);
  if (rest < 0 || rest % q != 0)
    throw SizeMismatch("cover_pure: " + std::to_string(total) + " vertices do not split into " +
                       std::to_string(count_big) + " classes of size " + std::to_string(q + 1) +
                       " plus classes of size " + std::to_string(q));

  std::vector<ColorClass> classes;
  classes.reserve(static_cast<std::size_t>(count_big + rest / q));
  std::size_t pos = 0;
  auto take = [&](Int size) {
    ColorClass c;
    c.kind = kind;
    c.vertices.assign(vertices.begin() + pos, vertices.begin() + pos + size);
    pos += static_cast<std::size_t>(size);
    classes.push_back(std::move(c));
  };
  for (Int i = 0; i < count_big; ++i) take(q + 1);
  for (Int i = 0; i < rest / q; ++i) take(q);
  return classes;
}

std::vector<MixedClass> build_mixed_classes(const BipartiteGraph& g, std::span<const Vertex> residual,
                                            std::span<const Int> split, Int q, WorkStats* stats) {
  Int total = 0;
  for (Int s : split) {
    if (s < 0 || s > q) throw PreconditionViolation("build_mixed_classes: split part outside [0, q]");
    total += s;
  }
  if (total != static_cast<Int>(residual.size()))
    throw PreconditionViolation("build_mixed_classes: split does not sum to |R|");

  // mark[v] == epoch  <=>  v has a neighbor in the A-part of the current class
  std::vector<std::uint32_t> mark(static_cast<std::size_t>(g.size()), 0);
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  const auto b_side = g.side_vertices(Side::B);
  std::uint64_t scans = 0;

  std::vector<MixedClass> classes;
  classes.reserve(split.size());
  std::size_t next_r = 0;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const auto epoch = static_cast<std::uint32_t>(i + 1);
    MixedClass c;
    c.a_part.assign(residual.begin() + next_r, residual.begin() + next_r + split[i]);
    next_r += static_cast<std::size_t>(split[i]);
    for (Vertex a : c.a_part) {
      for (Vertex w : g.neighbors(a)) {
        ++scans;
        mark[w] = epoch;
      }
    }

    const Int wanted = q + 1 - split[i];
    for (Vertex b : b_side) {
      if (static_cast<Int>(c.b_part.size()) == wanted) break;
      ++scans;
      if (!used[b] && mark[b] != epoch) {
        used[b] = true;
        c.b_part.push_back(b);
      }
    }
    if (static_cast<Int>(c.b_part.size()) != wanted)
      throw std::logic_error("build_mixed_classes: ran out of B-vertices for class " + std::to_string(i));
    classes.push_back(std::move(c));
  }
  if (stats) stats->edge_scans += scans;
  return classes;
}

Rebalanced rebalance(std::vector<MixedClass> mixed, Int e) {
  if (e < 0 || e > static_cast<Int>(mixed.size()))
    throw PreconditionViolation("rebalance: keep count outside [0, t]");
  Rebalanced out;
  for (std::size_t i = static_cast<std::size_t>(e); i < mixed.size(); ++i) {
    auto& bs = mixed[i].b_part;
    if (bs.empty()) throw std::logic_error("rebalance: class without a B-vertex");
    out.returned.push_back(bs.back());
    bs.pop_back();
  }
  std::sort(out.returned.begin(), out.returned.end());
  out.classes = std::move(mixed);
  return out;
}

Construction construct_cover(const BipartiteGraph& g, const NormalizedForm& nf,
                             const ColoringParameters& params) {
  if (params.delta < 2) throw DegreeTooSmall("construct_cover: delta < 2");
  if (params.q < 1) throw PreconditionViolation("construct_cover: q < 1");
  if (!feasibility(nf, params).all())
    throw PreconditionViolation("construct_cover: feasibility conditions do not hold");
  const auto a_side = g.side_vertices(Side::A);
  const Int s_size = nf.x * params.q + nf.u;
  if (static_cast<Int>(a_side.size()) != s_size + nf.M)
    throw PreconditionViolation("construct_cover: normalized form does not match |A|");

  const auto q = params.q;
  const auto t = params.t;
  Construction out;
  out.cover.q = q;
  out.cover.r = params.r;
  out.y = params.k - nf.x - t;
  auto& classes = out.cover.classes;

  classes = cover_pure(a_side.first(static_cast<std::size_t>(s_size)), nf.u, q, ClassKind::APure);
  const auto residual = a_side.subspan(static_cast<std::size_t>(s_size));

  std::vector<bool> covered(static_cast<std::size_t>(g.size()), false);
  if (t == 0) {
    if (nf.M != 0) throw std::logic_error("construct_cover: t = 0 with nonempty residual");
  } else {
    const auto parts = split(nf.M, t, params.H);
    auto mixed = build_mixed_classes(g, residual, parts, q, &out.stats);
    out.e = std::max<Int>(0, params.r - nf.u - out.y);
    auto rebalanced = rebalance(std::move(mixed), out.e);
    for (auto& mc : rebalanced.classes) {
      ColorClass c;
      c.kind = mc.a_part.empty() ? ClassKind::BPure : ClassKind::Mixed;
      c.vertices = std::move(mc.a_part);
      c.vertices.insert(c.vertices.end(), mc.b_part.begin(), mc.b_part.end());
      std::sort(c.vertices.begin(), c.vertices.end());
      for (Vertex v : c.vertices) covered[v] = true;
      classes.push_back(std::move(c));
    }
  }

  std::vector<Vertex> remaining_b;
  for (Vertex b : g.side_vertices(Side::B))
    if (!covered[b]) remaining_b.push_back(b);
  auto b_classes = cover_pure(remaining_b, params.r - nf.u - out.e, q, ClassKind::BPure);
  if (static_cast<Int>(b_classes.size()) != out.y)
    throw std::logic_error("construct_cover: B-pure class count differs from y");
  classes.insert(classes.end(), std::make_move_iterator(b_classes.begin()),
                 std::make_move_iterator(b_classes.end()));
  return out;
}

ColoringResult color_equitably(const BipartiteGraph& g, Mode mode) {
  const auto sizes = GraphSizes::of(g);
  const auto profile = derive_parameters(sizes.n, sizes.delta);
  const auto nf = normalize(sizes.a, profile.q, profile.k, profile.r);
  auto sel = choose_t(nf, sizes, mode);
  if (!sel.chosen) return Infeasible{sizes, nf, std::move(sel.reports)};

  ColoringSuccess ok;
  ok.construction = construct_cover(g, nf, *sel.chosen);
  ok.params = *sel.chosen;
  ok.nf = nf;
  ok.reports = std::move(sel.reports);
  return ok;
}

const char* to_string(Mode mode) noexcept {
  return mode == Mode::Theorem ? "theorem" : "best-effort";
}

const char* to_string(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::APure: return "A-pure";
    case ClassKind::Mixed: return "mixed";
    case ClassKind::BPure: return "B-pure";
  }
  return "?";
}

const char* to_string(NormalizationBranch branch) noexcept {
  return branch == NormalizationBranch::Direct ? "direct" : "corrected";
}

}  // namespace eqcolor
