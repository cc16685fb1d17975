#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcong/lambert.hpp"
#include "qcong/product_expr.hpp"

namespace qcong {

/// One summand of a right-hand side: a product, optionally times a Lambert series.
struct RhsTerm {
  ProductExpr prod;
  std::optional<LambertSpec> lambert;
};

/// Window [.., prec) exactly: the product is expanded far enough to cover the
/// Lambert series' negative exponents and vice versa.
template <class S>
LaurentSeries<S> eval_term(const Ring& ring, const RhsTerm& term, std::int64_t prec) {
  if (!term.lambert) return eval_product_expr<S>(ring, term.prod, prec);
  const std::int64_t s_prod = lower(term.prod, prec).shift();
  auto t = eval_lambert<S>(ring, *term.lambert, prec - s_prod);
  auto p = eval_product_expr<S>(ring, term.prod, prec - t.low());
  return p * t;
}

template <class S>
LaurentSeries<S> eval_terms(const Ring& ring, const std::vector<RhsTerm>& terms, std::int64_t prec) {
  LaurentSeries<S> total(ring, prec - 1, prec);
  for (const auto& t : terms) total = total + eval_term<S>(ring, t, prec);
  return total;
}

/// Append product-only terms parsed from text, each multiplied by `common`.
inline void add_products(std::vector<RhsTerm>& out, std::string_view text, std::int64_t ell,
                         const ProductExpr& common = {}) {
  for (auto& p : parse_product_sum(text, ell)) out.push_back({p * common, std::nullopt});
}

/// Append prefactor * T(a, b, c).
inline void add_lambert(std::vector<RhsTerm>& out, std::string_view prefactor, std::int64_t ell,
                        std::int64_t a, std::int64_t b, std::int64_t c) {
  out.push_back({parse_product(prefactor, ell), LambertSpec{a, b, c}});
}

}  // namespace qcong
