#include "checks_support.hpp"
#include "qcong/eps_poly.hpp"

namespace qcong {

using namespace detail;

namespace {

// Keeps the first failure of a family of cases under one label.
void absorb(CaseResult& agg, const CaseResult& sub, const std::string& where) {
  agg.window_low = std::min(agg.window_low, sub.window_low);
  agg.window_high = std::max(agg.window_high, sub.window_high);
  if (sub.status == Status::Fail && agg.status != Status::Fail) {
    agg.status = Status::Fail;
    agg.first_failure = sub.first_failure;
    agg.note = "first failure at " + where;
  } else if (sub.status == Status::Skipped && agg.status == Status::Pass) {
    agg.note += (agg.note.empty() ? "skipped: " : ", ") + where;
  }
}

ProductExpr term(Integer coeff, std::int64_t qpow) {
  ProductExpr e;
  e.coeff = std::move(coeff);
  e.qpow = qpow;
  return e;
}

// 1 / ((q;q)_{a} (q;q)_{b}) times coeff q^qpow
ProductExpr over_two_poch(Integer coeff, std::int64_t qpow, std::int64_t a, std::int64_t b) {
  ProductExpr e = term(std::move(coeff), qpow);
  e.poch_finite(1, a, -1).poch_finite(1, b, -1);
  return e;
}

}  // namespace

Report check_bailey_uv(std::int64_t n_max, std::int64_t prec) {
  Report r = start_report("bailey_uv", prec);
  r.param("n_max", n_max);
  Stopwatch sw;
  for (bool u : {true, false}) {
    const std::string name = u ? "u" : "v";
    // alpha_k = (-1)^{k+1} q^{k(k-1)/2} (A_k q^{sA} + B_k q^{sB}), A = k(k+1)/2, B = k(k-1)/2
    auto alpha = [&](std::int64_t k) {
      std::vector<std::pair<Integer, std::int64_t>> out;
      const long sign = (k % 2 == 0) ? -1 : 1;
      const std::int64_t base = k * (k - 1) / 2;
      out.emplace_back(Integer(sign * (k * (k + 1) / 2)), base + (u ? 0 : k));
      out.emplace_back(Integer(sign * (k * (k - 1) / 2)), base + (u ? k : 0));
      return out;
    };
    CaseResult zero{"alpha_0 = beta_0 = 0 (" + name + ")"};
    for (auto& [c, s] : alpha(0)) {
      if (c != 0) {
        zero.status = Status::Fail;
        zero.first_failure = FirstFailure{s, c.get_str(), "0"};
      }
    }
    r.add(zero);

    CaseResult agg{"beta_n from alpha (" + name + ")"};
    for (std::int64_t n = 1; n <= n_max; ++n) {
      ProductExpr beta = term(1, u ? 0 : n);
      beta.poch_finite(1, n - 1, 2).poch_finite(1, 2 * n, -1);
      auto lhs = eval_product_expr<Integer>(ZZ(), beta, prec);
      std::vector<ProductExpr> sum;
      for (std::int64_t k = 0; k <= n; ++k) {
        for (auto& [c, s] : alpha(k)) {
          if (c != 0) sum.push_back(over_two_poch(c, s, n - k, n + k));
        }
      }
      auto rhs = eval_product_sum<Integer>(ZZ(), sum, prec);
      absorb(agg, compare("n=" + std::to_string(n), lhs, rhs, prec), "n=" + std::to_string(n));
    }
    r.add(agg);
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

Report check_finite_jtp(std::int64_t n_max, std::int64_t prec, std::int64_t t_lo, std::int64_t t_hi) {
  Report r = start_report("finite_jtp", prec);
  r.param("n_max", n_max);
  r.param("t_range", std::to_string(t_lo) + ".." + std::to_string(t_hi));
  Stopwatch sw;
  for (std::int64_t t = t_lo; t <= t_hi; ++t) {
    const std::string ts = "t=" + std::to_string(t);
    CaseResult sym{"symmetric sum, " + ts}, tail{"j = 0 term plus paired tail, " + ts};
    std::string vanishing, printed_diff;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      // x = q^t: (xq;q)_n (1/x;q)_n / (q;q)_2n
      ProductExpr lhs_e = term(1, 0);
      lhs_e.poch_finite(t + 1, n, 1).poch_finite(-t, n, 1).poch_finite(1, 2 * n, -1);
      auto lhs = eval_product_expr<Integer>(ZZ(), lhs_e, prec);
      if (lhs.is_zero()) vanishing += (vanishing.empty() ? "" : ",") + std::to_string(n);

      std::vector<ProductExpr> s1;
      for (std::int64_t j = -n; j <= n; ++j) {
        s1.push_back(over_two_poch(j % 2 == 0 ? 1 : -1, t * j + j * (j + 1) / 2, n - j, n + j));
      }
      // the j = 0 term of the symmetric sum is 1/(q;q)_n^2
      std::vector<ProductExpr> s2{over_two_poch(1, 0, n, n)}, s2_printed{over_two_poch(1, 0, 0, 2 * n)};
      for (std::int64_t j = 1; j <= n; ++j) {
        const Integer sg = j % 2 == 0 ? 1 : -1;
        const std::int64_t tri = j * (j - 1) / 2;
        s2.push_back(over_two_poch(sg, tri - t * j, n - j, n + j));
        s2.push_back(over_two_poch(sg, tri + t * j + j, n - j, n + j));
        s2_printed.push_back(over_two_poch(sg, tri - t * n, n - j, n + j));
        s2_printed.push_back(over_two_poch(sg, tri + t * n + n, n - j, n + j));
      }
      const std::string where = "n=" + std::to_string(n);
      absorb(sym, compare(where, lhs, eval_product_sum<Integer>(ZZ(), s1, prec), prec), where);
      absorb(tail, compare(where, lhs, eval_product_sum<Integer>(ZZ(), s2, prec), prec), where);
      if (printed_diff.empty()) {
        if (auto d = first_difference(lhs, eval_product_sum<Integer>(ZZ(), s2_printed, prec))) {
          printed_diff = "n=" + std::to_string(n) + " exponent " + std::to_string(*d);
        }
      }
    }
    if (!vanishing.empty()) sym.note += (sym.note.empty() ? "" : "; ") + std::string("product vanishes for n=") + vanishing;
    tail.note += (tail.note.empty() ? "" : "; ") +
                 std::string("leading term 1/(q;q)_n^2, tail numerator x^-j + x^j q^j; "
                             "with 1/(q;q)_2n and x^-n + x^n q^n instead: ") +
                 (printed_diff.empty() ? "agrees" : "differs at " + printed_diff);
    r.add(sym);
    r.add(tail);
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

Report check_beta_second_derivatives(std::int64_t n_max, std::int64_t prec) {
  Report r = start_report("beta_second_derivatives", prec);
  r.param("n_max", n_max);
  Stopwatch sw;
  for (int point = 0; point < 2; ++point) {
    CaseResult agg{point == 0 ? "x = 1" : "x = 1/q"};
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const std::int64_t pw = prec + 2 * n + 4;
      const ZSeries one = ZSeries::one(ZZ(), pw);
      const ZSeries x0 = point == 0 ? one : ZSeries::monomial(ZZ(), 1, -1, pw);
      const auto x = EpsPoly<Integer>::variable_at(x0);
      const auto xi = invert(x);
      auto prod = EpsPoly<Integer>::constant(one);
      for (std::int64_t i = 0; i < n; ++i) {
        prod = prod * (EpsPoly<Integer>::constant(one) - x * ZSeries::monomial(ZZ(), 1, i + 1, pw));
        prod = prod * (EpsPoly<Integer>::constant(one) - xi * ZSeries::monomial(ZZ(), 1, i, pw));
      }
      ProductExpr denom = term(1, 0);
      denom.poch_finite(1, 2 * n, -1);
      auto got = truncate(prod.second_derivative() * eval_product_expr<Integer>(ZZ(), denom, pw), prec);

      ProductExpr closed = term(-2, point == 0 ? 0 : n + 2);
      closed.poch_finite(1, n - 1, 2).poch_finite(1, 2 * n, -1);
      auto want = eval_product_expr<Integer>(ZZ(), closed, prec);
      const std::string where = "n=" + std::to_string(n);
      absorb(agg, compare(where, got, want, prec), where);
    }
    r.add(agg);
  }
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

}  // namespace qcong
