#include "doctest.h"

#include <sstream>

#include "qcong/tables.hpp"

using namespace qcong;

TEST_CASE("row format") {
  std::istringstream in("# comment\n\n1 1 0 -2 -1 3 6 -2 -1  # trailing\n");
  auto t = DissectionTable::parse(in, "A13");
  REQUIRE(t.rows.size() == 1);
  const TableRow& r = t.rows[0];
  CHECK(r.component == 1);
  CHECK(r.coeff == 1);
  CHECK(r.qpow == 0);
  CHECK(r.exps == std::array<int, 6>{-2, -1, 3, 6, -2, -1});

  auto e = t.row_expr(r);
  CHECK(e.qpow == 1);
  CHECK(e.factors.size() == 6);
  const Ring r13 = Ring::mod(13);
  auto want = parse_product("q P(3)^3 P(4)^6 / P(1)^2 P(5)^2 P(2) P(6)", 13);
  CHECK(equal_on_window(eval_product_expr<Residue>(r13, e, 500), eval_product_expr<Residue>(r13, want, 500)));
}

TEST_CASE("malformed rows") {
  for (const char* bad : {"1 1 0 -2 -1 3 6 -2\n", "13 1 0 0 0 0 0 0 0\n", "1 13 0 0 0 0 0 0 0\n",
                          "1 1 x 0 0 0 0 0 0\n", "-1 1 0 0 0 0 0 0 0\n", "1 1 0 0 0 0 0 0 0 0\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(DissectionTable::parse(in, "bad"), TableParseError);
  }
  CHECK_THROWS_AS(DissectionTable::load("/nonexistent/a13.terms", "A13"), TableParseError);
}

TEST_CASE("shipped tables") {
  auto a = DissectionTable::load(data_dir() / "a13.terms", "A13");
  auto b = DissectionTable::load(data_dir() / "b13.terms", "B13");
  CHECK(a.rows.size() == 181);
  CHECK(b.rows.size() == 174);
  CHECK(a.component(0).empty());
  CHECK(b.component(10).empty());
  for (int i = 1; i < 13; ++i) CHECK_FALSE(a.component(i).empty());

  for (const auto* t : {&a, &b}) {
    std::istringstream in(t->serialize());
    CHECK(DissectionTable::parse(in, t->name) == *t);
  }

  // component i only feeds exponents congruent to i mod 13
  auto s = eval_table(a, 400);
  for (std::int64_t n = s.low(); n < s.prec(); ++n) {
    if (floor_mod(n, 13) == 0) REQUIRE(s.coeff(n) == 0);
  }
  auto sb = eval_table(b, 400);
  for (std::int64_t n = sb.low(); n < sb.prec(); ++n) {
    if (floor_mod(n, 13) == 10) REQUIRE(sb.coeff(n) == 0);
  }
}
