#include "eqcolor/constants.hpp"

#include <optional>
#include <stdexcept>

#include "eqcolor/error.hpp"

namespace eqcolor {

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

// Largest integer k with f(k) < 0 for f with a2 > 0, if any.
std::optional<BigInt> last_negative(const ScaledQuadratic& f) {
  // f decreases on integers <= vertex and increases on integers > vertex.
  const BigInt vertex = floor_div(-f.a1, 2 * f.a2);
  if (f(vertex + 1) >= 0) {
    if (f(vertex) < 0) return vertex;
    return std::nullopt;
  }
  // Cauchy bound: every real root has |k| <= 1 + max(|a1|, |a0|) / a2.
  BigInt bound = 2 + max(abs(f.a1), abs(f.a0)) / f.a2;
  BigInt lo = vertex + 1, hi = bound;  // f(lo) < 0 <= f(hi)
  while (hi - lo > 1) {
    BigInt mid = lo + (hi - lo) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw Error("constant " + v.str() + " exceeds the 64-bit range");
  return static_cast<Int>(v);
}

}  // namespace

ScaledQuadratic tq_polynomial(const Rational& zeta) {
  const BigInt p = numerator(zeta), d = denominator(zeta);
  // p(2k-3)(k-8) - d(5k^2-4k)
  return {2 * p - 5 * d, -19 * p + 4 * d, 24 * p};
}

ScaledQuadratic tl_polynomial(const Rational& zeta) {
  const BigInt p = numerator(zeta), d = denominator(zeta);
  // p(2k-3)(k-36) - d(41k^2-36k)
  return {2 * p - 41 * d, -75 * p + 36 * d, 108 * p};
}

ConstantsResult compute_constants(const Rational& zeta) {
  if (zeta <= Rational(41, 2))
    throw ZetaTooSmall("zeta = " + to_string(zeta) + " must exceed 41/2");
  const auto f1 = tq_polynomial(zeta);
  const auto f2 = tl_polynomial(zeta);

  // f2(36) < 0 for every zeta, so at least one polynomial is negative somewhere.
  auto n1 = last_negative(f1);
  auto n2 = last_negative(f2);
  BigInt last = *n2;
  if (n1 && *n1 > last) last = *n1;
  const BigInt k0 = last + 1;
  if (f1(k0) < 0 || f2(k0) < 0 || !(f1(last) < 0 || f2(last) < 0))
    throw std::logic_error("compute_constants: threshold is not minimal");

  ConstantsResult out;
  out.zeta = zeta;
  out.K0 = to_int(k0);
  out.K = std::max<Int>(out.K0, 37);
  out.c = 2 * out.K;
  return out;
}

bool hypotheses_hold(Int n, Int delta, const Rational& zeta) {
  const auto constants = compute_constants(zeta);
  return delta >= constants.c && Rational(n) >= zeta * delta;
}

bool hypotheses_hold(const BipartiteGraph& g, const Rational& zeta) {
  return hypotheses_hold(g.size(), g.max_degree(), zeta);
}

}  // namespace eqcolor
