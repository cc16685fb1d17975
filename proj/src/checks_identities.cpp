#include <array>

#include "checks_support.hpp"

namespace qcong {

using namespace detail;

namespace {

template <class S>
LaurentSeries<S> sum_of(const Ring& ring, std::string_view text, std::int64_t ell, std::int64_t prec,
                        const ProductExpr& common = {}) {
  auto terms = parse_product_sum(text, ell);
  for (auto& t : terms) t = t * common;
  return eval_product_sum<S>(ring, terms, prec);
}

std::vector<ProductExpr> power_terms(const std::vector<ProductExpr>& terms, int k) {
  std::vector<ProductExpr> out{ProductExpr{}};
  for (int i = 0; i < k; ++i) {
    std::vector<ProductExpr> next;
    for (const auto& a : out) {
      for (const auto& b : terms) next.push_back(a * b);
    }
    out = std::move(next);
  }
  return out;
}

ProductExpr e_power(std::int64_t a, std::int64_t e) {
  ProductExpr p;
  p.E(a, e);
  return p;
}

// E(1)^10 mod 13 inside E(169)^2 ( ... ): the form with separate q^5 and q^18 terms
constexpr const char* kE10Unmerged =
    "P(2)P(4)P(5)P(6) + 3qP(3)^2P(4)P(6) + 9q^2P(1)P(5)P(6)^2 + 9q^3P(2)P(3)P(5)P(6)"
    " + 12q^4P(2)P(3)P(5)^2 + 11q^5P(2)P(3)P(4)P(6) + 6q^5P(1)P(4)P(5)P(6) + 5q^18P(1)P(2)P(3)P(5)"
    " + q^32P(1)^2P(2)P(3) + 9q^20P(1)P(2)P(3)P(4) + 4q^8P(1)P(4)^2P(5) + 10q^9P(2)^2P(4)P(6)"
    " + q^10P(1)P(3)P(4)P(6) + 10q^11P(1)P(3)P(4)P(5) + 3q^12P(1)P(2)P(5)P(6)";

// q^18 term folded into the two q^5 terms
constexpr const char* kE10Merged =
    "P(2)P(4)P(5)P(6) + 3qP(3)^2P(4)P(6) + 9q^2P(1)P(5)P(6)^2 + 9q^3P(2)P(3)P(5)P(6)"
    " + 12q^4P(2)P(3)P(5)^2 + 3q^5P(2)P(3)P(4)P(6) + q^5P(1)P(4)P(5)P(6)"
    " + q^32P(1)^2P(2)P(3) + 9q^20P(1)P(2)P(3)P(4) + 4q^8P(1)P(4)^2P(5) + 10q^9P(2)^2P(4)P(6)"
    " + q^10P(1)P(3)P(4)P(6) + 10q^11P(1)P(3)P(4)P(5) + 3q^12P(1)P(2)P(5)P(6)";

constexpr std::array<const char*, 21> kRules13 = {
    "P(3)^3P(1) - P(4)P(2)^3 + q^13P(5)P(1)^3",
    "P(4)^3P(2) - P(5)P(3)^3 + q^26P(6)P(1)^3",
    "P(5)^3P(1) - P(6)P(3)^3 + q^13P(5)P(2)^3",
    "P(5)^3P(3) - P(6)P(4)^3 + q^39P(4)P(1)^3",
    "P(6)^3P(1) - P(4)^3P(3) + q^13P(3)^3P(2)",
    "P(6)^3P(2) - P(5)P(4)^3 + q^26P(3)P(2)^3",
    "P(6)^3P(3) - P(5)^3P(4) + q^39P(2)^3P(1)",
    "P(6)^3P(4) - P(6)P(5)^3 + q^52P(2)P(1)^3",
    "P(4)^2P(3)P(1) - P(5)P(3)P(2)^2 + q^13P(6)P(2)P(1)^2",
    "P(4)^2P(5)P(1) - P(6)P(2)P(3)^2 + q^13P(6)P(1)P(2)^2",
    "P(5)^2P(3)P(1) - P(6)P(2)^2P(4) + q^13P(6)P(1)^2P(3)",
    "P(5)^2P(4)P(2) - P(6)P(4)P(3)^2 + q^26P(5)P(2)P(1)^2",
    "P(5)^2P(6)P(1) - P(5)P(2)P(4)^2 + q^13P(4)P(1)P(3)^2",
    "P(5)^2P(6)P(2) - P(6)P(3)P(4)^2 + q^26P(4)P(1)P(2)^2",
    "P(6)^2P(3)P(1) - P(5)P(2)^2P(6) + q^13P(4)P(1)^2P(5)",
    "P(6)^2P(4)P(1) - P(5)^2P(2)P(3) + q^13P(4)^2P(1)P(2)",
    "P(6)^2P(4)P(2) - P(6)P(3)^2P(5) + q^26P(4)P(1)^2P(3)",
    "P(6)^2P(5)P(1) - P(5)P(4)P(3)^2 + q^13P(4)P(3)P(2)^2",
    "P(6)^2P(5)P(2) - P(5)^2P(4)P(3) + q^26P(3)^2P(2)P(1)",
    "P(6)^2P(5)P(3) - P(6)P(5)P(4)^2 + q^39P(3)P(2)P(1)^2",
    "P(6)P(4)P(5)P(1) - P(6)P(3)P(4)P(2) + q^13P(5)P(2)P(3)P(1)",
};

// P(a+d)P(a-d)P(b+c)P(b-c) - P(a+c)P(a-c)P(b+d)P(b-d) + q^{13(b-c)} P(a+b)P(a-b)P(c+d)P(c-d)
std::vector<ProductExpr> molk_tannery_terms(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  ProductExpr t1, t2, t3;
  t1.P(a + d, 13).P(a - d, 13).P(b + c, 13).P(b - c, 13);
  t2.coeff = -1;
  t2.P(a + c, 13).P(a - c, 13).P(b + d, 13).P(b - d, 13);
  t3.qpow = 13 * (b - c);
  t3.P(a + b, 13).P(a - b, 13).P(c + d, 13).P(c - d, 13);
  return {t1, t2, t3};
}

}  // namespace

Report check_eta_dissections(std::int64_t prec) {
  Report r = start_report("eta_dissections", prec);
  Stopwatch sw;
  const Ring& zz = ZZ();
  auto e1 = eval_product_expr<Integer>(zz, e_power(1, 1), prec);

  const char* five = "P(2)/P(1) - q - q^2 P(1)/P(2)";
  r.add(compare("E(1) 5-dissection over Z", e1, sum_of<Integer>(zz, five, 5, prec, e_power(25, 1)), prec));
  r.add(compare("E(1)^2 displayed 5-dissection over Z", eval_product_expr<Integer>(zz, e_power(1, 2), prec),
                sum_of<Integer>(zz, "P(2)^2/P(1)^2 - 2q P(2)/P(1) - q^2 + 2q^3 P(1)/P(2) + q^4 P(1)^2/P(2)^2", 5,
                                prec, e_power(25, 2)),
                prec));
  {
    auto cube = power_terms(parse_product_sum(five, 5), 3);
    for (auto& t : cube) t = t * e_power(25, 3);
    r.add(compare("E(1)^3 as cube of the 5-dissection over Z", eval_product_expr<Integer>(zz, e_power(1, 3), prec),
                  eval_product_sum<Integer>(zz, cube, prec), prec));
  }
  r.add(compare("E(1) 7-dissection over Z", e1,
                sum_of<Integer>(zz, "P(2)/P(1) - q P(3)/P(2) - q^2 + q^5 P(1)/P(3)", 7, prec, e_power(49, 1)), prec));

  const Ring r7 = Ring::mod(7);
  auto e4 = eval_product_expr<Residue>(r7, e_power(1, 4), prec);
  r.add(compare("E(1)^4 mod 7, nine-term form", e4,
                sum_of<Residue>(r7,
                                "P(2)P(3)/P(1) + 4q P(2)^2/P(1) + 6q P(3)^2/P(2) + 5q^8 P(1)^2/P(3) + 2q^2 P(3)"
                                " + q^3 P(2) + 2q^4 P(3)P(1)/P(2) + 3q^5 P(1) + 4q^6 P(1)P(2)/P(3)",
                                7, prec, e_power(49, 2)),
                prec));
  r.add(compare("E(1)^4 mod 7, eight-term form", e4,
                sum_of<Residue>(r7,
                                "P(2)P(3)/P(1) + 2q P(2)^2/P(1) + q P(3)^2/P(2) + 2q^2 P(3) + q^3 P(2)"
                                " + 2q^4 P(3)P(1)/P(2) + 3q^5 P(1) + 4q^6 P(1)P(2)/P(3)",
                                7, prec, e_power(49, 2)),
                prec));

  const Ring r13 = Ring::mod(13);
  auto e10 = eval_product_expr<Residue>(r13, e_power(1, 10), prec);
  r.add(compare("E(1)^10 mod 13, fifteen-term form", e10, sum_of<Residue>(r13, kE10Unmerged, 13, prec, e_power(169, 2)),
                prec));
  r.add(compare("E(1)^10 mod 13, fourteen-term merged form", e10,
                sum_of<Residue>(r13, kE10Merged, 13, prec, e_power(169, 2)), prec));
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

Report check_product_rules(std::int64_t prec) {
  Report r = start_report("product_rules", prec);
  Stopwatch sw;
  const Ring& zz = ZZ();
  auto zero = [&](std::int64_t low) { return ZSeries(zz, low, prec); };

  r.add(compare("ell=7 instance (b,c,d)=(3,2,1)", sum_of<Integer>(zz, "P(3)^3P(1) - P(2)^3P(3) + q^7P(1)^3P(2)", 7, prec),
                zero(0), prec));

  const Ring r5 = Ring::mod(5);
  r.add(compare("mod 5 product reduction", sum_of<Residue>(r5, "P(2)^2/P(1)^3 + 2q^5 P(1)^2/P(2)^3", 5, prec),
                eval_product_expr<Residue>(r5, e_power(25, -2), prec), prec));

  for (std::size_t i = 0; i < kRules13.size(); ++i) {
    r.add(compare("rule " + std::to_string(i + 1) + ": " + kRules13[i], sum_of<Integer>(zz, kRules13[i], 13, prec),
                  zero(0), prec));
  }

  for (std::int64_t a = 4; a <= 6; ++a) {
    for (std::int64_t b = 3; b < a; ++b) {
      for (std::int64_t c = 2; c < b; ++c) {
        for (std::int64_t d = 1; d < c; ++d) {
          auto terms = molk_tannery_terms(a, b, c, d);
          r.add(compare("general identity at (a,b,c,d)=(" + join_ints({a, b, c, d}) + ")",
                        eval_product_sum<Integer>(zz, terms, prec), zero(0), prec));
        }
      }
    }
  }
  {
    // the (5,3,2,1) point gives the last listed rule term by term
    auto mt = molk_tannery_terms(5, 3, 2, 1);
    auto rule = parse_product_sum(kRules13.back(), 13);
    CaseResult c{"(5,3,2,1) reproduces rule 21 term by term"};
    for (std::size_t i = 0; i < 3 && c.status == Status::Pass; ++i) {
      auto sub = compare("term", eval_product_expr<Integer>(zz, mt[i], prec), eval_product_expr<Integer>(zz, rule[i], prec), prec);
      if (sub.status != Status::Pass) c = sub, c.label = "(5,3,2,1) reproduces rule 21 term by term";
      c.window_low = sub.window_low;
      c.window_high = sub.window_high;
    }
    r.add(c);
  }

  const Ring r7 = Ring::mod(7);
  r.add(compare("A_{7,0} vanishes mod 7",
                sum_of<Residue>(r7, "4q^7 P(2)^2/P(1)P(3) + 3q^7 P(3)/P(2) + 3q^14 P(1)^2/P(3)^2", 7, prec),
                ModSeries(r7, 0, prec), prec));
  r.add(compare("A_{7,5} vanishes mod 7",
                sum_of<Residue>(r7, "2P(2)^3/P(1)^2P(3) + 5P(3)^3/P(2)^3 + 5q^7 P(1)^2/P(2)^2 + 5q^7 P(1)P(2)/P(3)^2", 7, prec),
                ModSeries(r7, 0, prec), prec));
  r.finalize();
  r.wall_time_s = sw.seconds();
  return r;
}

}  // namespace qcong
