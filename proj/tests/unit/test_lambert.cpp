#include "doctest.h"

#include <map>

#include "qcong/lambert.hpp"
#include "qcong/partitions.hpp"
#include "qcong/products.hpp"

using namespace qcong;

namespace {

const Ring ZZ = Ring::integers();

// Direct double loop over (n, j) with generous ranges and no shared helpers.
std::map<std::int64_t, long> brute_t(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t lo,
                                     std::int64_t hi) {
  std::map<std::int64_t, long> out;
  for (std::int64_t n = -200; n <= 200; ++n) {
    long sign = (n % 2 == 0) ? 1 : -1;
    std::int64_t E = c * n * (n + 1) / 2 + b * n;
    std::int64_t d = c * n + a;
    for (std::int64_t j = 0; j < 2000; ++j) {
      std::int64_t x = d > 0 ? E + j * d : E - d - j * d;
      if (x >= hi) break;
      if (x >= lo) out[x] += d > 0 ? sign : -sign;
    }
  }
  return out;
}

std::map<std::int64_t, long> brute_s(std::int64_t ell, std::int64_t b, std::int64_t lo, std::int64_t hi) {
  std::map<std::int64_t, long> out;
  for (std::int64_t n = -200; n <= 200; ++n) {
    if (n == 0) continue;
    long w = (n % 2 == 0 ? 1 : -1) * n * (n + 1);
    std::int64_t E = n * (n + 1) / 2 + b * n;
    std::int64_t d = ell * n;
    for (std::int64_t j = 0; j < 2000; ++j) {
      std::int64_t x = d > 0 ? E + j * d : E - d - j * d;
      if (x >= hi) break;
      if (x >= lo) out[x] += d > 0 ? w : -w;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("t_series against brute force") {
  for (auto [a, b, c] : std::vector<std::array<std::int64_t, 3>>{{3, 3, 9}, {1, 0, 2}, {13, 13, 169}, {5, -4, 7}, {-3, 2, 5}}) {
    auto t = t_series<Integer>(ZZ, a, b, c, 120);
    auto ref = brute_t(a, b, c, t.low(), t.prec());
    for (std::int64_t n = t.low(); n < t.prec(); ++n) {
      long want = ref.count(n) ? ref[n] : 0;
      REQUIRE(t.coeff(n) == want);
    }
    // everything below the chosen low really is zero
    auto below = brute_t(a, b, c, -100000, t.low());
    for (auto& [x, v] : below) REQUIRE(v == 0);
  }
  auto t = t_series<Integer>(ZZ, 3, 3, 9, 60);
  CHECK(t.coeff(0) == brute_t(3, 3, 9, 0, 1)[0]);
}

TEST_CASE("t_series n = 0 term") {
  // T(q,1,q^2): n = 0 gives 1/(1-q); other n start at exponents >= 1 or carry q-shifts
  auto t = t_series<Integer>(ZZ, 1, 0, 2, 10, std::int64_t{-10});
  auto ref = brute_t(1, 0, 2, -10, 10);
  for (std::int64_t n = -10; n < 10; ++n) CHECK(t.coeff(n) == (ref.count(n) ? ref[n] : 0));
  CHECK_THROWS_AS(t_series<Integer>(ZZ, 9, 3, 9, 10), std::domain_error);
}

TEST_CASE("bilateral bound is robust") {
  for (auto [a, b, c] : std::vector<std::array<std::int64_t, 3>>{{3, 3, 9}, {7, 7, 49}, {13, 13, 169}, {91, 13, 169}, {2, -10, 3}}) {
    for (std::int64_t prec : {50, 200, 700}) {
      auto t0 = t_series<Integer>(ZZ, a, b, c, prec, std::int64_t{-400});
      auto t5 = t_series<Integer>(ZZ, a, b, c, prec, std::int64_t{-400}, 5);
      REQUIRE(equal_on_window(t0, t5));
    }
  }
  for (std::int64_t ell : {3, 5, 13}) {
    for (std::int64_t b = 0; b < ell; ++b) {
      auto s0 = s_series<Integer>(ZZ, ell, b, 300, std::int64_t{-200});
      auto s5 = s_series<Integer>(ZZ, ell, b, 300, std::int64_t{-200}, 5);
      REQUIRE(equal_on_window(s0, s5));
    }
  }
  for (auto w : {PoleWeight::NTimesNPlus1, PoleWeight::NTimesNMinus1}) {
    REQUIRE(equal_on_window(double_pole_sum<Integer>(ZZ, w, 300), double_pole_sum<Integer>(ZZ, w, 300, false, 5)));
  }
}

TEST_CASE("T functional equation at (3,3,9)") {
  auto lhs = t_series<Integer>(ZZ, 3, 3, 9, 200, std::int64_t{-50});
  auto rhs = shift(t_series<Integer>(ZZ, 6, 6, 9, 197, std::int64_t{-53}), 3);
  CHECK(equal_on_window(lhs, rhs));
}

TEST_CASE("s_series") {
  auto s = s_series<Integer>(ZZ, 3, 0, 50, std::int64_t{-5});
  auto ref = brute_s(3, 0, -5, 50);
  for (std::int64_t n = -5; n < 50; ++n) REQUIRE(s.coeff(n) == (ref.count(n) ? ref[n] : 0));

  for (std::int64_t ell : {5, 7}) {
    for (std::int64_t b = 0; b < ell; ++b) {
      auto t = s_series<Integer>(ZZ, ell, b, 80);
      auto r = brute_s(ell, b, t.low(), 80);
      for (std::int64_t n = t.low(); n < 80; ++n) REQUIRE(t.coeff(n) == (r.count(n) ? r[n] : 0));
    }
  }
}

TEST_CASE("U mod 5 from the S sums") {
  const std::int64_t ell = 5, prec = 60;
  Ring r = Ring::mod(ell);
  ModSeries sum(r, 0, prec);
  for (std::int64_t b = 0; b <= ell - 2; ++b) {
    sum = sum + scale(s_series<Residue>(r, ell, b, prec), b + 1);
  }
  const Integer minus_half = -Integer(static_cast<long>(inverse_mod(2, ell)));
  auto e = euler_E<Residue>(r, 1, prec);
  auto u = scale(sum, minus_half) * invert(e * e * e);
  auto [U, V] = uv_series_def<Residue>(r, prec);
  CHECK(equal_on_window(u, U));
}

TEST_CASE("double-pole sums give U and V") {
  const std::int64_t prec = 300;
  auto e = euler_E<Integer>(ZZ, 1, prec);
  auto inv_e3 = invert(e * e * e);
  auto [U, V] = uv_series_def<Integer>(ZZ, prec);
  auto du = double_pole_sum<Integer>(ZZ, PoleWeight::NTimesNPlus1, prec);
  auto dv = double_pole_sum<Integer>(ZZ, PoleWeight::NTimesNMinus1, prec);
  // full weights are even: halve coefficientwise
  for (auto* d : {&du, &dv}) {
    for (auto& x : d->raw()) {
      REQUIRE(mpz_even_p(x.get_mpz_t()));
      x /= 2;
    }
  }
  CHECK(equal_on_window(-(du * inv_e3), U));
  CHECK(equal_on_window(-(dv * inv_e3), V));
  CHECK(equal_on_window(double_pole_sum<Integer>(ZZ, PoleWeight::NTimesNPlus1, prec, true), du));

  // n and -n-1 give the same q-power q^{n(n+1)/2}
  for (std::int64_t n = 1; n < 6; ++n) CHECK(n * (n + 1) / 2 == (-n - 1) * (-n) / 2);
}
