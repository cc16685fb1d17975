#include "doctest.h"

#include <sstream>

#include "qcong/partitions.hpp"
#include "qcong/products.hpp"

using namespace qcong;

namespace {
const Ring ZZ = Ring::integers();
}

TEST_CASE("p(n)") {
  CHECK(p_count(0) == 1);
  CHECK(p_count(5) == 7);
  CHECK(partitions_of(5).size() == 7);
  auto inv = invert(euler_E<Integer>(ZZ, 1, 21));
  CHECK(p_count(20) == inv.coeff(20));
  CHECK(p_count(20) == 627);
  auto p = p_table(1000);
  for (int n = 0; n <= 1000; ++n) {
    if (n % 5 == 4) REQUIRE(p[n] % 5 == 0);
    if (n % 7 == 5) REQUIRE(p[n] % 7 == 0);
    if (n % 11 == 6) REQUIRE(p[n] % 11 == 0);
  }
  auto inv500 = invert(euler_E<Integer>(ZZ, 1, 500));
  for (int n = 0; n < 500; ++n) REQUIRE(inv500.coeff(n) == p[n]);
}

TEST_CASE("quadruple constraint conventions") {
  QuadrupleConstraint u{Variant::U}, v{Variant::V};
  CHECK_FALSE(u.admits({}, {1}, {}, {}));
  CHECK(u.admits({1}, {}, {}, {}));
  CHECK(u.admits({2}, {}, {}, {4}));
  CHECK_FALSE(u.admits({2}, {}, {}, {5}));
  CHECK_FALSE(u.admits({2}, {1}, {}, {}));
  CHECK(u.admits({2}, {2}, {3}, {2}));
  CHECK_FALSE(v.admits({2}, {}, {}, {}));
  CHECK(v.admits({2, 2}, {}, {}, {}));
  CHECK(v.admits({3, 1, 1}, {}, {}, {2}));
  CHECK(smallest_part({}) == std::nullopt);
  CHECK(largest_part({}) == 0);
}

TEST_CASE("u and v counts") {
  CHECK(u_count(0) == 0);
  CHECK(v_count(1) == 0);
  CHECK(u_count(1) == 1);
  auto [U, V] = uv_series_def<Integer>(ZZ, 30);
  CHECK(U.coeff(2) == u_count(2));
  CHECK(V.coeff(2) == v_count(2));
  CHECK(U.coeff(1) == 1);
  CHECK(V.coeff(0) == 0);
  CHECK(V.coeff(1) == 0);
  for (int n = 0; n <= 12; ++n) {
    REQUIRE(u_count(n) == quadruple_count_brute(Variant::U, n));
    REQUIRE(v_count(n) == quadruple_count_brute(Variant::V, n));
  }
  for (int n = 0; n < 30; ++n) {
    REQUIRE(U.coeff(n) == u_count(n));
    REQUIRE(V.coeff(n) == v_count(n));
    if (n >= 1) REQUIRE(u_count(n) >= p_count(n));
  }
}

TEST_CASE("hand count for n = 2") {
  // pi1 = (2): 1. pi1 = (1,1): 1. pi1 = (1) and the other 1 in pi2, pi3 or pi4: 3.
  CHECK(u_count(2) == 5);
  // only pi1 = (1,1)
  CHECK(v_count(2) == 1);
}

TEST_CASE("series constructions agree") {
  auto [U, V] = uv_series_def<Integer>(ZZ, 300);
  auto [Ul, Vl] = uv_series_lambert<Integer>(ZZ, 300);
  CHECK(equal_on_window(U, Ul));
  CHECK(equal_on_window(V, Vl));
  CHECK(U.valuation() == 1);
  CHECK(V.valuation() == 2);

  Ring r = Ring::mod(1365);
  auto [Um, Vm] = uv_series_def<Residue>(r, 300);
  CHECK(equal_on_window(Um, reduce_mod(U, 1365)));
  CHECK(equal_on_window(Vm, reduce_mod(V, 1365)));
}

TEST_CASE("F(q) by smallest part") {
  auto F = f_series_smallest_part<Integer>(ZZ, 500);
  CHECK(F.coeff(0) == 1);
  CHECK(F.coeff(4) == 5);
  CHECK(equal_on_window(F, invert(euler_E<Integer>(ZZ, 1, 500))));
}

TEST_CASE("sequence export") {
  SequenceTable t{"p", {1, 1, 2, 3, 5, 7}, Origin::SeriesDef};
  std::ostringstream os;
  t.write(os);
  CHECK(os.str() == "# p 5 series_def\n1\n1\n2\n3\n5\n7\n");
}
