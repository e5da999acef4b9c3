#pragma once

#include <cstdint>

#include "eqcolor/engine.hpp"
#include "eqcolor/rational.hpp"

namespace eqcolor {

/// Threshold constants for a given zeta > 41/2.
///
/// K0 is the least integer such that both
///   zeta(2k-3)(k-8)  - (5k^2 - 4k)   >= 0   and
///   zeta(2k-3)(k-36) - (41k^2 - 36k) >= 0
/// hold for every integer k >= K0. K = max(K0, 37) and c = 2K is the degree
/// threshold above which theorem mode is guaranteed to succeed whenever
/// n >= zeta * delta.
struct ConstantsResult {
  Rational zeta;
  Int K0 = 0;
  Int K = 0;
  Int c = 0;
};

/// Integer coefficients of den(zeta) * f(k) = a2 k^2 + a1 k + a0.
struct ScaledQuadratic {
  BigInt a2, a1, a0;

  BigInt operator()(const BigInt& k) const { return (a2 * k + a1) * k + a0; }
};

/// First and second feasibility polynomial, scaled by the denominator of zeta.
ScaledQuadratic tq_polynomial(const Rational& zeta);
ScaledQuadratic tl_polynomial(const Rational& zeta);

/// Throws ZetaTooSmall if zeta <= 41/2.
ConstantsResult compute_constants(const Rational& zeta);

/// delta >= c(zeta) and n >= zeta * delta, compared exactly.
bool hypotheses_hold(Int n, Int delta, const Rational& zeta);
bool hypotheses_hold(const BipartiteGraph& g, const Rational& zeta);

}  // namespace eqcolor
