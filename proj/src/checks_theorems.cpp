#include <fstream>
#include <set>
#include <sstream>

#include "checks_support.hpp"

namespace qcong {

using namespace detail;

std::string to_string(Theorem2Case c) {
  switch (c) {
    case Theorem2Case::U3: return "U3";
    case Theorem2Case::V3: return "V3";
    case Theorem2Case::U5: return "U5";
    case Theorem2Case::V5: return "V5";
    case Theorem2Case::U7: return "U7";
    case Theorem2Case::V7: return "V7";
    case Theorem2Case::U13: return "U13";
    case Theorem2Case::V13: return "V13";
  }
  return "?";
}

std::int64_t modulus_of(Theorem2Case c) {
  switch (c) {
    case Theorem2Case::U3: case Theorem2Case::V3: return 3;
    case Theorem2Case::U5: case Theorem2Case::V5: return 5;
    case Theorem2Case::U7: case Theorem2Case::V7: return 7;
    default: return 13;
  }
}

bool is_u(Theorem2Case c) {
  return c == Theorem2Case::U3 || c == Theorem2Case::U5 || c == Theorem2Case::U7 || c == Theorem2Case::U13;
}

namespace {

struct LambertPiece {
  const char* prefactor;
  std::int64_t a;  // denominator 1 - q^{ell^2 n + a}
};

// coefficient and q-power of each (prefactor / (E(ell^2) P(1))) * T(a, ell, ell^2)
std::vector<LambertPiece> lambert_pieces(Theorem2Case c) {
  switch (c) {
    case Theorem2Case::U3: return {{"2 q^2", 3}};
    case Theorem2Case::V3: return {{"2 q^3", 6}, {"q^2", 3}};
    case Theorem2Case::U5: return {{"4 q^2", 5}, {"4 q^4", 10}};
    case Theorem2Case::V5: return {{"4 q^5", 15}, {"q^2", 5}};
    case Theorem2Case::U7: return {{"5 q", 7}, {"2 q^4", 14}, {"4 q^6", 21}};
    case Theorem2Case::V7: return {{"6 q^7", 28}, {"2 q", 7}, {"q^4", 14}, {"5 q^6", 21}};
    case Theorem2Case::U13:
      return {{"12 q^3", 39}, {"10 q^-8", 13}, {"11 q^7", 52}, {"q^10", 65}, {"8 q^-2", 26}, {"4 q^12", 78}};
    case Theorem2Case::V13:
      return {{"12 q^13", 91}, {"11 q^3", 39}, {"3 q^-8", 13}, {"12 q^7", 52}, {"9 q^-2", 26}, {"5 q^12", 78}};
  }
  return {};
}

// Product-only terms; for ell = 7 every term carries E(49)^4 / E(7).
const char* product_part(Theorem2Case c) {
  switch (c) {
    case Theorem2Case::U3: return "q E(9)^2 / E(3) P(1)";
    case Theorem2Case::V3: return "";
    case Theorem2Case::U5: return "q E(25)^2 P(2) / E(5) P(1) + q^2 E(25)^2 / E(5)";
    case Theorem2Case::V5: return "4 q^3 E(25)^2 P(1) / E(5) P(2)";
    case Theorem2Case::U7:
      return "3 q P(2)^2 P(3) / P(1)^3 + 4 q^8 P(2)^3 / P(1) P(3)^2 + 3 q^8 P(1) P(3)^2 / P(2)^3"
             " + 4 q^2 P(3)^2 / P(1)^2 + q^2 P(2)^3 / P(1)^3 + q^9 P(1) P(3) / P(2)^2 + 2 q^9 P(2) / P(3)"
             " + 3 q^3 P(2) P(3) / P(1)^2 + 4 q^3 P(2)^4 / P(1)^3 P(3) + q^3 P(3)^3 / P(2)^2 P(1)"
             " + 4 q^10 P(1) / P(2) + 5 q^10 P(2)^2 / P(3)^2 + 2 q^6 P(3)^2 / P(2)^2 + q^6 P(2) / P(1)"
             " + 4 q^13 P(1)^2 / P(2) P(3) + 6 q^13 P(1) P(2)^2 / P(3)^3";
    case Theorem2Case::V7:
      return "5 q P(2)^2 P(3) / P(1)^3 + 3 q^8 + 6 q^8 P(2)^3 / P(1) P(3)^2 + q^15 P(1)^3 / P(3) P(2)^2"
             " + q^2 P(2)^3 / P(1)^3 + 3 q^9 P(3) P(1) / P(2)^2 + q^9 P(2) / P(3) + 4 q^3 P(2)^4 / P(1)^3 P(3)"
             " + 5 q^10 P(1) / P(2) + 4 q^10 P(2)^2 / P(3)^2 + 4 q^5 P(3) / P(1) + 5 q^12 P(1)^2 / P(2)^2"
             " + q^12 P(1) P(2) / P(3)^2 + 2 q^6 P(2) / P(1) + 6 q^13 P(1)^2 / P(2) P(3)"
             " + 4 q^13 P(1) P(2)^2 / P(3)^3";
    default: return "";
  }
}

// Residue classes the right-hand side must be free of, from the first theorem.
std::vector<std::int64_t> vanishing_classes(Theorem2Case c) {
  switch (c) {
    case Theorem2Case::U3: return {0};
    case Theorem2Case::V3: return {1};
    case Theorem2Case::U5: return {0, 3};
    case Theorem2Case::V5: return {1, 4};
    case Theorem2Case::U7: return {0, 5};
    case Theorem2Case::V7: return {};
    case Theorem2Case::U13: return {0};
    case Theorem2Case::V13: return {10};
  }
  return {};
}

DissectionTable table_for(Theorem2Case c) {
  const bool u = is_u(c);
  return DissectionTable::load(data_dir() / (u ? "a13.terms" : "b13.terms"), u ? "A13" : "B13");
}

}  // namespace

std::vector<RhsTerm> theorem2_terms(Theorem2Case c) {
  const std::int64_t ell = modulus_of(c);
  std::vector<RhsTerm> out;
  ProductExpr common;
  if (ell == 7) common.E(49, 4).E(7, -1);
  if (*product_part(c)) add_products(out, product_part(c), ell, common);
  const std::string denom = " / E(" + std::to_string(ell * ell) + ") P(1)";
  for (const auto& piece : lambert_pieces(c)) {
    add_lambert(out, std::string(piece.prefactor) + denom, ell, piece.a, ell, ell * ell);
  }
  return out;
}

ModSeries theorem2_rhs(Theorem2Case c, std::int64_t prec) {
  const std::int64_t ell = modulus_of(c);
  auto rhs = eval_terms<Residue>(Ring::mod(ell), theorem2_terms(c), prec);
  if (ell == 13) rhs = rhs + eval_table(table_for(c), prec);
  return rhs;
}

Report check_theorem2(Theorem2Case c, std::int64_t prec) {
  const std::int64_t ell = modulus_of(c);
  Report r = start_report("theorem2_" + to_string(c), prec);
  r.param("modulus", ell);
  r.param("window_low", -200);
  Stopwatch sw;

  // each displayed sum (-1)^n q^{(L n^2 + s n)/2} / (1 - q^{L n + a}), L = ell^2, s = L + 2 ell,
  // must be T(a, ell, L) = sum (-1)^n q^{L n(n+1)/2 + ell n} / (1 - q^{L n + a})
  {
    CaseResult map{"displayed sums are T(a, ell, ell^2)"};
    const std::int64_t L = ell * ell, s = L + 2 * ell;
    for (const auto& piece : lambert_pieces(c)) {
      for (std::int64_t n = -2; n <= 2; ++n) {
        const std::int64_t shown = (L * n * n + s * n) / 2, ours = L * n * (n + 1) / 2 + ell * n;
        if (shown != ours && map.status == Status::Pass) {
          map.status = Status::Fail;
          map.first_failure = FirstFailure{n, std::to_string(shown), std::to_string(ours)};
          map.note = "a=" + std::to_string(piece.a);
        }
      }
    }
    r.add(map);
  }

  auto [U, V] = uv_mod(ell, prec);
  ModSeries lhs = is_u(c) ? U : V;
  ModSeries rhs = theorem2_rhs(c, prec);
  const std::int64_t low = std::min<std::int64_t>(-200, std::min(lhs.low(), rhs.low()));
  lhs = extend_low(lhs, low);
  rhs = extend_low(rhs, low);
  r.add(compare("definition vs display", lhs, rhs, prec));

  for (auto j : vanishing_classes(c)) {
    CaseResult z{"display has no q^n with n = " + std::to_string(j) + " mod " + std::to_string(ell)};
    z.window_low = rhs.low();
    z.window_high = rhs.prec();
    for (std::int64_t n = rhs.low(); n < rhs.prec(); ++n) {
      if (floor_mod(n - j, ell) == 0 && rhs.coeff(n) != 0) {
        z.status = Status::Fail;
        z.first_failure = FirstFailure{n, std::to_string(rhs.coeff(n)), "0"};
        break;
      }
    }
    r.add(z);
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

Report check_table_integrity() {
  Report r = start_report("table_integrity", 0);
  Stopwatch sw;
  for (auto c : {Theorem2Case::U13, Theorem2Case::V13}) {
    const DissectionTable t = table_for(c);
    const int empty = is_u(c) ? 0 : 10;
    r.param(t.name + "_rows", static_cast<std::int64_t>(t.rows.size()));

    CaseResult comps{t.name + ": components 0..12, only component " + std::to_string(empty) + " empty"};
    std::set<int> seen;
    for (const auto& row : t.rows) seen.insert(row.component);
    for (int i = 0; i < 13; ++i) {
      if ((i == empty) == seen.count(i)) {
        comps.status = Status::Fail;
        comps.first_failure = FirstFailure{i, std::to_string(t.component(i).size()) + " rows", i == empty ? "0 rows" : "> 0 rows"};
        break;
      }
    }
    r.add(comps);

    CaseResult rows{t.name + ": q-powers are multiples of 13, coefficients nonzero mod 13"};
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& row = t.rows[i];
      if (floor_mod(row.qpow, 13) != 0 || floor_mod(row.coeff, 13) == 0) {
        rows.status = Status::Fail;
        rows.first_failure = FirstFailure{static_cast<std::int64_t>(i), std::to_string(row.qpow), "multiple of 13"};
        break;
      }
    }
    r.add(rows);

    CaseResult trip{t.name + ": parse(serialize(table)) == table"};
    std::istringstream in(t.serialize());
    if (!(DissectionTable::parse(in, t.name) == t)) {
      trip.status = Status::Fail;
      trip.first_failure = FirstFailure{0, "round trip differs", "identical"};
    }
    r.add(trip);
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

}  // namespace qcong
