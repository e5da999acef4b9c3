#include "eqcolor/verify.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace eqcolor {

VerificationReport verify(const BipartiteGraph& g, const Cover& cover, Int k, Int q, Int r) {
  VerificationReport rep;
  const Vertex n = g.size();

  std::vector<Int> owner(static_cast<std::size_t>(n), -1);
  bool disjoint = true;
  bool in_range = true;
  for (std::size_t c = 0; c < cover.classes.size(); ++c) {
    const auto& vs = cover.classes[c].vertices;
    ++rep.size_profile[static_cast<Int>(vs.size())];
    for (Vertex v : vs) {
      if (v < 0 || v >= n) {
        in_range = false;
        continue;
      }
      if (owner[v] >= 0) disjoint = false;
      owner[v] = static_cast<Int>(c);
    }
  }
  rep.partition = in_range && disjoint &&
                  std::none_of(owner.begin(), owner.end(), [](Int c) { return c < 0; });

  rep.proper = true;
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[u] == owner[v]) {
      rep.proper = false;
      break;
    }
  }

  rep.class_count_ok = static_cast<Int>(cover.classes.size()) == k;
  if (rep.size_profile.empty()) {
    rep.equitable = true;
  } else {
    rep.equitable = rep.size_profile.rbegin()->first - rep.size_profile.begin()->first <= 1;
  }

  Int big = 0;
  bool sizes_ok = true;
  for (auto [size, count] : rep.size_profile) {
    if (size == q + 1)
      big += count;
    else if (size != q)
      sizes_ok = false;
  }
  rep.exact_profile_ok = sizes_ok && big == r;
  return rep;
}

Cover cover_from_colors(const BipartiteGraph& g, const std::vector<int>& colors) {
  Cover cover;
  int max_color = -1;
  for (int c : colors) max_color = std::max(max_color, c);
  cover.classes.resize(static_cast<std::size_t>(max_color + 1));
  for (std::size_t v = 0; v < colors.size(); ++v)
    if (colors[v] >= 0) cover.classes[colors[v]].vertices.push_back(static_cast<Vertex>(v));
  for (auto& cls : cover.classes) {
    bool has_a = false, has_b = false;
    for (Vertex v : cls.vertices) {
      if (v < g.size() && g.side(v) == Side::A) has_a = true; else has_b = true;
    }
    cls.kind = has_a && has_b ? ClassKind::Mixed : has_a ? ClassKind::APure : ClassKind::BPure;
  }
  const auto n = static_cast<Int>(colors.size());
  const auto k = static_cast<Int>(cover.classes.size());
  if (k > 0) {
    cover.q = n / k;
    cover.r = n % k;
  }
  return cover;
}

namespace {

using Mask = std::uint64_t;

// Backtracking over vertices in descending-degree order. Classes with the same
// quota that are still empty are interchangeable, so only the first one is tried.
class QuotaSearch {
 public:
  QuotaSearch(const BipartiteGraph& g, Int k) : n_(g.size()), k_(k) {
    q_ = n_ / k;
    const Int r = n_ % k;
    quota_.assign(static_cast<std::size_t>(k), q_);
    std::fill_n(quota_.begin(), r, q_ + 1);
    members_.assign(static_cast<std::size_t>(k), 0);
    fill_.assign(static_cast<std::size_t>(k), 0);
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
    order_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    assignment_.assign(static_cast<std::size_t>(n_), -1);
  }

  bool run() { return q_ >= 1 && place(0, all_mask()); }

  const std::vector<int>& assignment() const { return assignment_; }

 private:
  Mask all_mask() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  // Every class can still reach its quota from the unassigned vertices.
  bool completable(Mask unassigned) const {
    for (Int c = 0; c < k_; ++c) {
      const Int missing = quota_[c] - fill_[c];
      if (missing == 0) continue;
      Mask blocked = 0;
      for (Mask m = members_[c]; m; m &= m - 1) blocked |= adj_[std::countr_zero(m)];
      if (std::popcount(unassigned & ~blocked) < missing) return false;
    }
    return true;
  }

  bool place(Vertex depth, Mask unassigned) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    const Mask bit = Mask{1} << v;
    const Mask rest = unassigned & ~bit;
    for (Int c = 0; c < k_; ++c) {
      if (fill_[c] == quota_[c] || (members_[c] & adj_[v])) continue;
      if (fill_[c] == 0 && c > 0 && fill_[c - 1] == 0 && quota_[c - 1] == quota_[c]) continue;
      members_[c] |= bit;
      ++fill_[c];
      assignment_[v] = static_cast<int>(c);
      if (completable(rest) && place(depth + 1, rest)) return true;
      members_[c] &= ~bit;
      --fill_[c];
      assignment_[v] = -1;
    }
    return false;
  }

  Vertex n_;
  Int k_;
  Int q_ = 0;
  std::vector<Int> quota_;
  std::vector<Mask> members_;
  std::vector<Int> fill_;
  std::vector<Mask> adj_;
  std::vector<Vertex> order_;
  std::vector<int> assignment_;
};

void check_limits(const BipartiteGraph& g, const OracleLimits& limits) {
  const Vertex cap = std::min<Vertex>(limits.max_vertices, 64);
  if (g.size() > cap)
    throw TooLarge("oracle limited to " + std::to_string(cap) + " vertices, graph has " +
                   std::to_string(g.size()));
}

}  // namespace

std::optional<Cover> brute_equitable_k(const BipartiteGraph& g, Int k, OracleLimits limits) {
  check_limits(g, limits);
  if (k < 1 || k > g.size()) return std::nullopt;
  QuotaSearch search(g, k);
  if (!search.run()) return std::nullopt;
  return cover_from_colors(g, search.assignment());
}

std::optional<Int> brute_chi_e(const BipartiteGraph& g, Int k_max, OracleLimits limits) {
  check_limits(g, limits);
  k_max = std::min<Int>(k_max, g.size());
  for (Int k = 1; k <= k_max; ++k)
    if (brute_equitable_k(g, k, limits)) return k;
  return std::nullopt;
}

std::vector<NormalTriple> brute_normal_forms(Int a, Int q, Int k, Int r) {
  std::vector<NormalTriple> out;
  for (Int x = 0; x <= k / 2; ++x)
    for (Int u = 0; u <= x; ++u)
      for (Int M = 0; M < q + k; ++M)
        if (a == x * q + u + M && u <= r && r - u <= k - x) out.push_back({x, u, M});
  return out;
}

}  // namespace eqcolor
