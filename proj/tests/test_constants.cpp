#include <doctest.h>

#include <random>

#include "eqcolor/constants.hpp"
#include "eqcolor/engine.hpp"

using namespace eqcolor;

namespace {

// Independent oracle: evaluate both polynomials straight from their
// definition over a fixed window and report the last k where either is
// negative, plus one.
Int scan_k0(const Rational& zeta, Int window) {
  Int last = -1;
  for (Int k = 0; k <= window; ++k) {
    Rational f1 = zeta * (2 * k - 3) * (k - 8) - (5 * k * k - 4 * k);
    Rational f2 = zeta * (2 * k - 3) * (k - 36) - (41 * k * k - 36 * k);
    if (f1 < 0 || f2 < 0) last = k;
  }
  return last + 1;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("21") == 21);
  CHECK(parse_rational("41/2") == Rational(41, 2));
  CHECK(parse_rational("41/2+1/10") == Rational(103, 5));
  CHECK(parse_rational(" 20.6 ") == Rational(103, 5));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("1000000") == 1000000);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("2 3"), ParseError);
}

TEST_CASE("compute_constants: zeta = 21") {
  auto c = compute_constants(21);
  CHECK(c.K0 == 1538);
  CHECK(c.K == 1538);
  CHECK(c.c == 3076);
  CHECK(scan_k0(21, 100000) == 1538);
}

TEST_CASE("compute_constants: large zeta bottoms out at 37") {
  auto c = compute_constants(1000000);
  CHECK(c.K0 == 37);
  CHECK(c.K == 37);
  CHECK(c.c == 74);
  CHECK(scan_k0(1000000, 10000) == 37);
}

TEST_CASE("compute_constants matches the scan and is antitone in zeta") {
  const std::vector<Rational> zetas{Rational(103, 5), 21, 25, 41, 100, 1000000};
  Int previous = std::numeric_limits<Int>::max();
  for (const auto& z : zetas) {
    auto c = compute_constants(z);
    CHECK(c.K0 == scan_k0(z, 20000));
    CHECK(c.K == std::max<Int>(c.K0, 37));
    CHECK(c.c == 2 * c.K);
    CHECK(c.c <= previous);
    previous = c.c;
  }
}

TEST_CASE("compute_constants rejects zeta <= 41/2") {
  CHECK_THROWS_AS(compute_constants(Rational(41, 2)), ZetaTooSmall);
  CHECK_THROWS_AS(compute_constants(20), ZetaTooSmall);
}

TEST_CASE("compute_constants just above the threshold: K0 is minimal") {
  const Rational zeta = Rational(41, 2) + Rational(1, 1000);
  auto c = compute_constants(zeta);
  auto negative_at = [&](Int k) {
    Rational f1 = zeta * (2 * k - 3) * (k - 8) - (5 * k * k - 4 * k);
    Rational f2 = zeta * (2 * k - 3) * (k - 36) - (41 * k * k - 36 * k);
    return f1 < 0 || f2 < 0;
  };
  CHECK(negative_at(c.K0 - 1));
  for (Int k = c.K0; k < c.K0 + 2000; ++k) REQUIRE_FALSE(negative_at(k));
  CHECK(c.K0 > 700000);
}

TEST_CASE("hypotheses_hold") {
  CHECK(hypotheses_hold(64596, 3076, 21));
  CHECK_FALSE(hypotheses_hold(64595, 3076, 21));
  CHECK_FALSE(hypotheses_hold(1000000, 5, 21));
  CHECK_FALSE(hypotheses_hold(1000000, 3075, 21));
  CHECK_THROWS_AS(hypotheses_hold(100, 10, Rational(41, 2)), ZetaTooSmall);
}

TEST_CASE("theorem guarantee: feasibility conditions hold above the thresholds") {
  std::mt19937_64 rng(17);
  for (const Rational zeta : {Rational(21), Rational(25), Rational(41)}) {
    const Int K = compute_constants(zeta).K;
    for (int trial = 0; trial < 400; ++trial) {
      const Int k = K + std::uniform_int_distribution<Int>(0, 4000)(rng);
      const Int delta = 2 * k - 3 + std::uniform_int_distribution<Int>(0, 1)(rng);
      REQUIRE((delta + 1) / 2 + 1 == k);
      const Int n_min = static_cast<Int>(
          BigInt(numerator(zeta) * delta + denominator(zeta) - 1) / denominator(zeta));
      const Int n = n_min + std::uniform_int_distribution<Int>(0, 3 * n_min)(rng);
      const Int q = n / k;
      const Int t = k / 4;
      const Int worst_M = q + k - 1;

      // worst case b = ceil(n/2)
      const Int b = n - n / 2;
      const Int num = b - t * (q + 1);
      const Int L = num >= 0 ? num / (delta - 1) : -((-num + delta - 2) / (delta - 1));
      CHECK(t * q >= worst_M);
      CHECK(L >= 0);
      CHECK(t * L >= worst_M);

      // and the actual normalized form for a random |A| is theorem-feasible
      const Int a = std::uniform_int_distribution<Int>(0, n / 2)(rng);
      GraphSizes sizes{n, a, n - a, delta};
      auto prof = derive_parameters(n, delta);
      auto nf = normalize(a, prof.q, prof.k, prof.r);
      auto sel = choose_t(nf, sizes, Mode::Theorem);
      CHECK(sel.chosen.has_value());
    }
  }
}
