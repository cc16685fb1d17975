#include "doctest.h"

#include <random>

#include "qcong/eps_poly.hpp"
#include "qcong/products.hpp"
#include "qcong/series.hpp"

using namespace qcong;

namespace {

const Ring ZZ = Ring::integers();

// (q;q)_inf from the pentagonal number theorem, written out independently.
ZSeries pentagonal(std::int64_t prec) {
  ZSeries s(ZZ, 0, prec);
  for (std::int64_t k = -100; k <= 100; ++k) {
    std::int64_t g = k * (3 * k - 1) / 2;
    if (g < prec) s.at(g) += (k % 2 == 0) ? 1 : -1;
  }
  return s;
}

template <class S>
LaurentSeries<S> random_series(Ring ring, std::mt19937_64& rng, std::int64_t low, std::int64_t prec,
                               bool unit_lead = false) {
  std::uniform_int_distribution<long> d(-20, 20);
  LaurentSeries<S> s(ring, low, prec);
  for (std::int64_t n = low; n < prec; ++n) s.at(n) = ScalarOps<S>::from(ring, d(rng));
  if (unit_lead) s.at(low) = ScalarOps<S>::from(ring, (rng() & 1) ? 1L : -1L);
  return s;
}

}  // namespace

TEST_CASE("window arithmetic") {
  auto f = ZSeries::from_ints(ZZ, 0, {0, 1, 1});
  auto g = ZSeries::from_ints(ZZ, 0, {0, 0, 1});
  CHECK(equal_on_window(f + g, ZSeries::from_ints(ZZ, 0, {0, 1, 2})));

  auto m = shift(ZSeries::one(ZZ, 10), -8);
  CHECK(m.low() == -8);
  CHECK(m.prec() == 2);
  CHECK(m.coeff(-8) == 1);

  auto e = scale(pentagonal(5), -1);
  CHECK(equal_on_window(e, ZSeries::from_ints(ZZ, 0, {-1, 1, 1, 0, 0})));

  CHECK_THROWS_AS(ZSeries(ZZ, 3, 3), WindowError);
  CHECK_THROWS_AS(ModSeries(Ring::mod(7), 0, 3) + ModSeries(Ring::mod(5), 0, 3), RingMismatch);
  CHECK_THROWS_AS(f.coeff(f.prec()), WindowError);
  CHECK_THROWS_AS(f.coeff(-1), WindowError);
}

TEST_CASE("sum keeps terms below the other operand's low") {
  auto a = ZSeries::monomial(ZZ, 1, -8, 10);
  auto b = ZSeries::monomial(ZZ, 1, 0, 12);
  auto s = a + b;
  CHECK(s.low() == -8);
  CHECK(s.prec() == 10);
  CHECK(s.coeff(-8) == 1);
  CHECK(s.coeff(0) == 1);
}

TEST_CASE("multiplication") {
  ZSeries geo(ZZ, 0, 10);
  for (int i = 0; i < 10; ++i) geo.at(i) = 1;
  auto one_minus_q = ZSeries::from_ints(ZZ, 0, {1, -1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(equal_on_window(one_minus_q * geo, ZSeries::one(ZZ, 10)));

  auto qm1 = ZSeries::monomial(ZZ, 1, -1, 5);
  auto q1 = ZSeries::monomial(ZZ, 1, 1, 5);
  auto p = qm1 * q1;
  CHECK(p.low() == 0);
  CHECK(p.coeff(0) == 1);

  auto e = pentagonal(8);
  auto cube = e * e * e;
  CHECK(equal_on_window(cube, ZSeries::from_ints(ZZ, 0, {1, -3, 0, 5, 0, 0, -7, 0})));
}

TEST_CASE("inversion") {
  auto f = ZSeries::from_ints(ZZ, 0, {1, -1, 0, 0, 0});
  CHECK(equal_on_window(invert(f), ZSeries::from_ints(ZZ, 0, {1, 1, 1, 1, 1})));

  auto g = ZSeries::from_ints(ZZ, 0, {0, 1, -1, 0, 0, 0});
  auto gi = invert(g);
  CHECK(gi.low() == -1);
  CHECK(gi.coeff(-1) == 1);
  CHECK(gi.coeff(0) == 1);

  // 1/E(5) counts partitions into multiples of 5
  auto inv = invert(euler_E<Integer>(ZZ, 5, 12));
  std::vector<Integer> dp(12, 0);
  dp[0] = 1;
  for (int k = 5; k < 12; k += 5)
    for (int w = k; w < 12; ++w) dp[w] += dp[w - k];
  for (int n = 0; n < 12; ++n) CHECK(inv.coeff(n) == dp[n]);

  CHECK(invert(pentagonal(10)).coeff(5) == 7);
  CHECK_THROWS_AS(invert(ZSeries::from_ints(ZZ, 0, {2, 1})), NotInvertible);
  CHECK_THROWS_AS(invert(ZSeries(ZZ, 0, 4)), NotInvertible);
  CHECK_THROWS_AS(invert(ModSeries::from_ints(Ring::mod(9), 0, {3, 1})), NotInvertible);
}

TEST_CASE("invert is two-sided on random unit series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t low = static_cast<std::int64_t>(rng() % 7) - 3;
    if (trial % 2 == 0) {
      auto f = random_series<Integer>(ZZ, rng, low, low + 25, true);
      auto g = invert(f);
      auto one = ZSeries::one(ZZ, 100);
      REQUIRE(equal_on_window(f * g, one));
      REQUIRE(equal_on_window(g * f, one));
    } else {
      Ring r = Ring::mod(13);
      auto f = random_series<Residue>(r, rng, low, low + 25);
      f.at(low) = 1 + static_cast<Residue>(rng() % 12);
      auto g = invert(f);
      auto one = ModSeries::one(r, 100);
      REQUIRE(equal_on_window(f * g, one));
      REQUIRE(equal_on_window(g * f, one));
    }
  }
}

TEST_CASE("ring laws on random windows") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_series<Integer>(ZZ, rng, -2, 20);
    auto b = random_series<Integer>(ZZ, rng, 0, 18);
    auto c = random_series<Integer>(ZZ, rng, 1, 25);
    REQUIRE(equal_on_window(a + b, b + a));
    REQUIRE(equal_on_window(a * b, b * a));
    REQUIRE(equal_on_window((a * b) * c, a * (b * c)));
    REQUIRE(equal_on_window(a * (b + c), a * b + a * c));
    REQUIRE(equal_on_window((a + b) + c, a + (b + c)));
  }
}

TEST_CASE("residue multiplication with a large modulus") {
  Ring r = Ring::mod(2147483629);
  std::mt19937_64 rng(3);
  auto a = random_series<Residue>(r, rng, 0, 40);
  auto b = random_series<Residue>(r, rng, 0, 40);
  ZSeries az(ZZ, 0, 40), bz(ZZ, 0, 40);
  for (int i = 0; i < 40; ++i) {
    az.at(i) = Integer(static_cast<long>(a.coeff(i)));
    bz.at(i) = Integer(static_cast<long>(b.coeff(i)));
  }
  CHECK(equal_on_window(a * b, reduce_mod(az * bz, r.modulus())));
}

TEST_CASE("subst_pow") {
  auto f = ZSeries::from_ints(ZZ, 0, {1, 1});
  auto g = subst_pow(f, 3);
  CHECK(g.coeff(0) == 1);
  CHECK(g.coeff(3) == 1);
  CHECK(g.prec() == 4);

  auto e = subst_pow(pentagonal(4), 13);
  CHECK(e.low() == 0);
  CHECK(e.prec() == 40);
  CHECK(e.coeff(13) == -1);
  CHECK(e.coeff(26) == -1);

  auto h = subst_pow(ZSeries::from_ints(ZZ, -1, {1, 1}), 2);
  CHECK(h.low() == -2);
  CHECK(h.coeff(-2) == 1);
  CHECK(h.coeff(-1) == 0);
  CHECK(h.coeff(0) == 1);

  std::mt19937_64 rng(5);
  auto r = random_series<Integer>(ZZ, rng, -3, 15);
  CHECK(equal_on_window(subst_pow(r, 6), subst_pow(subst_pow(r, 2), 3)));
}

TEST_CASE("reduce_mod") {
  auto f = reduce_mod(ZSeries::from_ints(ZZ, 0, {5, -3}), 5);
  CHECK(f.coeff(0) == 0);
  CHECK(f.coeff(1) == 2);
  CHECK(reduce_mod(ZSeries::from_ints(ZZ, 0, {-1}), 13).coeff(0) == 12);

  auto e = pentagonal(8);
  auto e3 = reduce_mod(e * e * e, 3);
  CHECK(e3.coeff(3) == 2);
  CHECK(equal_on_window(e3, reduce_mod(euler_E<Integer>(ZZ, 3, 8), 3)));
}

TEST_CASE("reduce_mod commutes with the operations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series<Integer>(ZZ, rng, -4, 30);
    auto b = random_series<Integer>(ZZ, rng, 0, 28);
    const std::int64_t m = 7;
    REQUIRE(equal_on_window(reduce_mod(a + b, m), reduce_mod(a, m) + reduce_mod(b, m)));
    REQUIRE(equal_on_window(reduce_mod(a * b, m), reduce_mod(a, m) * reduce_mod(b, m)));
    REQUIRE(equal_on_window(reduce_mod(shift(a, 3), m), shift(reduce_mod(a, m), 3)));
    REQUIRE(equal_on_window(reduce_mod(subst_pow(a, 4), m), subst_pow(reduce_mod(a, m), 4)));
    auto da = dissect(a, 5);
    auto dm = dissect(reduce_mod(a, m), 5);
    for (int j = 0; j < 5; ++j) REQUIRE(equal_on_window(reduce_mod(da[j], m), dm[j]));
  }
}

TEST_CASE("dissection") {
  auto parts = dissect(ZSeries::from_ints(ZZ, 0, {1, 1, 1}), 2);
  REQUIRE(parts.size() == 2);
  CHECK(equal_on_window(parts[0], ZSeries::from_ints(ZZ, 0, {1, 1})));
  CHECK(equal_on_window(parts[1], ZSeries::from_ints(ZZ, 0, {1})));

  ZSeries f(ZZ, -8, 20);
  f.at(-8) = 1;
  f.at(5) = 1;
  auto d = dissect(f, 13);
  for (int j = 0; j < 13; ++j) CHECK(d[j].is_zero() == (j != 5));
  CHECK(d[5].coeff(-1) == 1);
  CHECK(d[5].coeff(0) == 1);

  std::mt19937_64 rng(23);
  for (int ell : {1, 2, 3, 5, 13}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::int64_t low = static_cast<std::int64_t>(rng() % 30) - 15;
      auto g = random_series<Integer>(ZZ, rng, low, low + 40 + static_cast<std::int64_t>(rng() % 20));
      auto comps = dissect(g, ell);
      ZSeries sum(ZZ, g.low(), g.prec());
      for (int j = 0; j < ell; ++j) sum = sum + shift(subst_pow(comps[j], ell), j);
      REQUIRE(equal_on_window(sum, g));
    }
  }
}

TEST_CASE("eps ring") {
  auto one = ZSeries::one(ZZ, 6);
  ZSeries zero(ZZ, 0, 6);
  EpsPoly<Integer> a(one, one, zero), b(one, -one, zero);
  auto p = a * b;
  CHECK(equal_on_window(p.part[0], one));
  CHECK(p.part[1].is_zero());
  CHECK(equal_on_window(p.part[2], -one));

  auto inv = invert(a);
  CHECK(equal_on_window(inv.part[0], one));
  CHECK(equal_on_window(inv.part[1], -one));
  CHECK(equal_on_window(inv.part[2], one));

  auto x = EpsPoly<Integer>::variable_at(one);
  auto cube = x * x * x;
  CHECK(cube.second_derivative().coeff(0) == 6);

  CHECK_THROWS_AS(invert(EpsPoly<Integer>(zero, one, one)), NotInvertible);
}
