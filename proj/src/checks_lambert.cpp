#include <random>

#include "checks_support.hpp"

namespace qcong {

using namespace detail;

Report check_lambert_functional_eq(int points, std::int64_t prec) {
  Report r = start_report("lambert_functional_eq", prec);
  r.param("points", points);
  Stopwatch sw;
  std::mt19937_64 rng(20);
  for (int i = 0; i < points; ++i) {
    const std::int64_t c = 2 + static_cast<std::int64_t>(rng() % 19);
    const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (c - 1));
    const std::int64_t b = static_cast<std::int64_t>(rng() % 21) - 10;
    // T(a,b,c) = q^{c-a-b} T(c-a, c-b, c)
    const std::int64_t s = c - a - b;
    auto lhs = t_series<Integer>(ZZ(), a, b, c, prec);
    auto rhs = shift(t_series<Integer>(ZZ(), c - a, c - b, c, prec - s), s);
    r.add(compare("(a,b,c)=(" + join_ints({a, b, c}) + ")", lhs, rhs, prec));
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

Report check_chan_identity(int points, std::int64_t prec) {
  Report r = start_report("chan_identity", prec);
  r.param("points", points);
  Stopwatch sw;
  struct Point {
    std::int64_t M, a, b1, b2;
  };
  std::vector<Point> valid;
  for (std::int64_t M : {5, 7, 8, 9, 11, 13}) {
    for (std::int64_t a = 1; a < 2 * M; ++a) {
      for (std::int64_t b1 = 1; b1 < M; ++b1) {
        for (std::int64_t b2 = b1 + 1; b2 < M; ++b2) {
          bool ok = true;
          for (std::int64_t x : {a, a - b1, a - b2, b2 - b1}) ok = ok && floor_mod(x, M) != 0;
          if (ok) valid.push_back({M, a, b1, b2});
        }
      }
    }
  }
  for (int i = 0; i < points; ++i) {
    const Point& p = valid[static_cast<std::size_t>(i) * valid.size() / static_cast<std::size_t>(points)];
    ProductExpr lhs_e;
    lhs_e.jac(p.a, p.M, 1).E(p.M, 2).jac(p.b1, p.M, -1).jac(p.b2, p.M, -1);
    std::vector<RhsTerm> terms;
    ProductExpr f1, f2;
    f1.jac(p.a - p.b1, p.M, 1).jac(p.b2 - p.b1, p.M, -1);
    f2.jac(p.a - p.b2, p.M, 1).jac(p.b1 - p.b2, p.M, -1);
    terms.push_back({f1, LambertSpec{p.b1, p.a - p.b2, p.M}});
    terms.push_back({f2, LambertSpec{p.b2, p.a - p.b1, p.M}});
    auto lhs = eval_product_expr<Integer>(ZZ(), lhs_e, prec);
    auto rhs = eval_terms<Integer>(ZZ(), terms, prec);
    r.add(compare("(M,a,b1,b2)=(" + join_ints({p.M, p.a, p.b1, p.b2}) + ")", lhs, rhs, prec));
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

Report check_pole_split(const std::vector<std::int64_t>& ells, std::int64_t n_max, std::int64_t prec) {
  Report r = start_report("pole_split", prec);
  r.param("ells", join_ints(ells));
  r.param("n_max", n_max);
  Stopwatch sw;
  for (auto ell : ells) {
    const Ring ring = Ring::mod(ell);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      ProductExpr lhs_e;
      lhs_e.poch_finite(n, 1, -2);
      std::vector<ProductExpr> rhs_e;
      for (std::int64_t k = 0; k <= ell - 2; ++k) {
        ProductExpr t;
        t.coeff = k + 1;
        t.qpow = n * k;
        t.poch_finite(ell * n, 1, -1);
        rhs_e.push_back(t);
      }
      r.add(compare("ell=" + std::to_string(ell) + ", n=" + std::to_string(n),
                    eval_product_expr<Residue>(ring, lhs_e, prec), eval_product_sum<Residue>(ring, rhs_e, prec),
                    prec));
    }
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

namespace {

ModSeries times_minus_half_inv_e3(const ModSeries& f, std::int64_t ell, std::int64_t prec) {
  ProductExpr g;
  g.coeff = minus_half(ell);
  g.E(1, -3);
  return times_to(f, [&](std::int64_t p) { return eval_product_expr<Residue>(f.ring(), g, p); }, prec);
}

}  // namespace

Report check_s_to_uv(const std::vector<std::int64_t>& ells, std::int64_t prec) {
  Report r = start_report("s_to_uv_assembly", prec);
  r.param("ells", join_ints(ells));
  Stopwatch sw;
  for (auto ell : ells) {
    const Ring ring = Ring::mod(ell);
    const std::int64_t h = (ell - 1) / 2;
    const Integer half(static_cast<long>(inverse_mod(2, ell)));
    std::vector<ModSeries> S;
    for (std::int64_t b = 0; b < ell; ++b) S.push_back(s_series<Residue>(ring, ell, b, prec));
    auto zero = ModSeries(ring, 0, prec);
    ModSeries u_direct = zero, v_direct = zero;
    for (std::int64_t b = 0; b <= ell - 2; ++b) {
      u_direct = u_direct + scale(S[b], b + 1);
      v_direct = v_direct + scale(S[b + 1], b + 1);
    }
    ModSeries u_group = S[0] + scale(S[h], half);
    for (std::int64_t b = 1; b <= h - 1; ++b) u_group = u_group + scale(S[b], b + 1) - scale(S[ell - 1 - b], b);
    ModSeries v_group = -scale(S[h], half) - S[ell - 1];
    for (std::int64_t b = 0; b <= (ell - 5) / 2; ++b) {
      v_group = v_group + scale(S[b + 1], b + 1) - scale(S[ell - 2 - b], b + 2);
    }
    auto [U, V] = uv_mod(ell, prec);
    const std::string tag = "ell=" + std::to_string(ell);
    r.add(compare(tag + ": U from direct S sum", times_minus_half_inv_e3(u_direct, ell, prec), U, prec));
    r.add(compare(tag + ": V from direct S sum", times_minus_half_inv_e3(v_direct, ell, prec), V, prec));
    r.add(compare(tag + ": U regrouped sum equals direct sum", u_group, u_direct, prec));
    r.add(compare(tag + ": V regrouped sum equals direct sum", v_group, v_direct, prec));
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

bool lemma_m_valid(std::int64_t ell, std::int64_t b, std::int64_t m) {
  return m >= 1 && m < ell && floor_mod(2 * m - 2 * b - 1, ell) != 0;
}

std::vector<RhsTerm> lemma_rhs(LemmaKind kind, std::int64_t ell, std::int64_t b, std::int64_t m) {
  if (!lemma_m_valid(ell, b, m)) throw std::invalid_argument("lemma: m not admissible for this b");
  const bool main = kind == LemmaKind::Main;
  const std::int64_t L2 = ell * ell, h2 = ell * (ell - 1) / 2, A = h2 + ell * m - ell * b;
  const std::int64_t tri_b = b * (b + 1) / 2;
  const long inv4 = static_cast<long>(inverse_mod(4, ell));
  std::vector<RhsTerm> out;

  ProductExpr first;
  first.coeff = main ? Integer(2 * b * (b % 2 == 0 ? 1 : -1)) : Integer(2 * (b + 1) * (b % 2 == 0 ? -1 : 1));
  first.qpow = ell * m - tri_b;
  first.E(1, 3).E(L2, -1).jac(ell * m, L2, -1);
  out.push_back({first, LambertSpec{A, ell * m, L2}});

  const int outer = ((ell + 1) / 2 + b) % 2 == 0 ? 1 : -1;
  for (std::int64_t k = 0; k < ell; ++k) {
    if (floor_mod(2 * k - 2 * b - 1, ell) == 0) continue;
    const std::int64_t n1 = A + ell * k, n2 = ell * k - ell * m;
    if (floor_mod(n1, L2) == 0 || floor_mod(n2, L2) == 0) continue;  // [1; q] = 0
    const std::int64_t d = main ? k - b : b - k + 1;
    const long w = floor_mod(d * d - inv4, ell);
    if (w == 0) continue;
    ProductExpr t;
    t.coeff = Integer((main ? outer : -outer) * (k % 2 == 0 ? 1 : -1) * w);
    t.qpow = (L2 - 1) / 8 - tri_b + ell * m + k * (k - ell) / 2;
    t.E(L2, 2).jac(ell * m, L2, -1).jac(A, L2, -1).jac(n1, L2, 1).jac(n2, L2, 1).jac(h2 - ell * b + ell * k, L2, -1);
    out.push_back({t, std::nullopt});
  }
  return out;
}

CaseResult lemma_case(LemmaKind kind, std::int64_t ell, std::int64_t b, std::int64_t m, std::int64_t prec) {
  const Ring ring = Ring::mod(ell);
  const std::int64_t arg = kind == LemmaKind::Main ? b : ell - 1 - b;
  auto lhs = s_series<Residue>(ring, ell, arg, prec, -ell * ell);
  auto rhs = eval_terms<Residue>(ring, lemma_rhs(kind, ell, b, m), prec);
  return compare("ell=" + std::to_string(ell) + ", b=" + std::to_string(b) + ", m=" + std::to_string(m), lhs, rhs,
                 prec);
}

Report check_lemma(LemmaKind kind, const std::vector<std::int64_t>& ells, std::int64_t prec) {
  Report r = start_report(kind == LemmaKind::Main ? "lemma_main" : "lemma_second", prec);
  r.param("ells", join_ints(ells));
  r.param("m", "1,2 where admissible");
  Stopwatch sw;
  for (auto ell : ells) {
    for (std::int64_t b = 0; b < ell; ++b) {
      for (std::int64_t m : {1, 2}) {
        if (lemma_m_valid(ell, b, m)) r.add(lemma_case(kind, ell, b, m, prec));
      }
    }
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

namespace {

// S(j) through whichever lemma covers it, scaled by coeff and folded into `out`.
void add_s_via_lemmas(std::vector<RhsTerm>& out, std::int64_t ell, std::int64_t j, const ProductExpr& scale_by) {
  const std::int64_t h = (ell - 1) / 2;
  const LemmaKind kind = j <= h ? LemmaKind::Main : LemmaKind::Second;
  const std::int64_t b = j <= h ? j : ell - 1 - j;
  std::int64_t m = 1;
  while (!lemma_m_valid(ell, b, m)) ++m;
  for (auto& t : lemma_rhs(kind, ell, b, m)) out.push_back({t.prod * scale_by, t.lambert});
}

}  // namespace

Report check_lemma_pipeline(const std::vector<std::int64_t>& ells, std::int64_t prec) {
  Report r = start_report("lemma_pipeline", prec);
  r.param("ells", join_ints(ells));
  Stopwatch sw;
  for (auto ell : ells) {
    const Ring ring = Ring::mod(ell);
    const std::int64_t h = (ell - 1) / 2;
    const Integer half(static_cast<long>(inverse_mod(2, ell)));
    for (bool u : {true, false}) {
      // regrouped coefficients of S(j); they agree with j+1 (for U) and j (for V) mod ell
      std::vector<RhsTerm> terms;
      for (std::int64_t j = 0; j < ell; ++j) {
        Integer c;
        if (u) {
          if (j == ell - 1) continue;
          c = j == h ? half : (j < h ? Integer(j + 1) : Integer(-(ell - 1 - j)));
        } else {
          if (j == 0) continue;
          c = j == h ? Integer(-half) : (j == ell - 1 ? Integer(-1) : (j < h ? Integer(j) : Integer(-(ell - j))));
        }
        ProductExpr s;
        s.coeff = c * minus_half(ell);
        s.E(1, -3);
        add_s_via_lemmas(terms, ell, j, s);
      }
      auto assembled = eval_terms<Residue>(ring, terms, prec);
      auto [U, V] = uv_mod(ell, prec);
      const Theorem2Case tc = ell == 5    ? (u ? Theorem2Case::U5 : Theorem2Case::V5)
                              : ell == 7  ? (u ? Theorem2Case::U7 : Theorem2Case::V7)
                              : ell == 13 ? (u ? Theorem2Case::U13 : Theorem2Case::V13)
                                          : (u ? Theorem2Case::U3 : Theorem2Case::V3);
      const std::string tag = std::string(u ? "U" : "V") + " mod " + std::to_string(ell);
      r.add(compare(tag + ": lemma assembly vs theorem display", assembled, theorem2_rhs(tc, prec), prec));
      r.add(compare(tag + ": lemma assembly vs definition", assembled, u ? U : V, prec));
    }
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

std::vector<RhsTerm> ecubed_rhs(std::int64_t ell) {
  std::vector<RhsTerm> out;
  const std::int64_t L2 = ell * ell;
  for (std::int64_t k = 1; k < ell; ++k) {
    ProductExpr t;
    t.coeff = Integer(((((1 + ell) / 2 + k) % 2 == 0) ? 1 : -1) * k);
    t.qpow = (L2 - 1) / 8 + k * (k - ell) / 2;
    t.E(L2, 1).jac(ell * k, L2, 1);
    out.push_back({t, std::nullopt});
  }
  return out;
}

Report check_ecubed_dissection(const std::vector<std::int64_t>& ells, std::int64_t prec) {
  Report r = start_report("ecubed_dissection", prec);
  r.param("ells", join_ints(ells));
  Stopwatch sw;
  for (auto ell : ells) {
    const Ring ring = Ring::mod(ell);
    ProductExpr cube;
    cube.E(1, 3);
    auto lhs = eval_product_expr<Residue>(ring, cube, prec);
    r.add(compare("ell=" + std::to_string(ell) + ": k-sum", lhs, eval_terms<Residue>(ring, ecubed_rhs(ell), prec), prec));
    const char* short_form = ell == 5 ? "2 q E(25) P(1) + E(25) P(2)"
                             : ell == 7 ? "5 q^3 E(49) P(1) + 4 q E(49) P(2) + E(49) P(3)"
                                        : nullptr;
    if (short_form) {
      r.add(compare("ell=" + std::to_string(ell) + ": short form " + short_form, lhs,
                    eval_product_sum<Residue>(ring, parse_product_sum(short_form, ell), prec), prec));
    }
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

}  // namespace qcong
