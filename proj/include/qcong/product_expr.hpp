#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/products.hpp"

namespace qcong {

struct ProductFactor {
  enum class Kind { PochInf, Jacobi, PochFinite };
  Kind kind;
  std::int64_t a;
  std::int64_t M;  // modulus for PochInf/Jacobi, length n for PochFinite
  std::int64_t e;

  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

/// coeff * q^qpow * prod factor^e.
struct ProductExpr {
  Integer coeff = 1;
  std::int64_t qpow = 0;
  std::vector<ProductFactor> factors;

  ProductExpr& E(std::int64_t a, std::int64_t e = 1) {
    factors.push_back({ProductFactor::Kind::PochInf, a, a, e});
    return *this;
  }
  ProductExpr& poch(std::int64_t a, std::int64_t M, std::int64_t e = 1) {
    factors.push_back({ProductFactor::Kind::PochInf, a, M, e});
    return *this;
  }
  ProductExpr& jac(std::int64_t a, std::int64_t M, std::int64_t e = 1) {
    factors.push_back({ProductFactor::Kind::Jacobi, a, M, e});
    return *this;
  }
  /// P(a) = [q^{ell a}; q^{ell^2}].
  ProductExpr& P(std::int64_t a, std::int64_t ell, std::int64_t e = 1) {
    return jac(ell * a, ell * ell, e);
  }
  ProductExpr& poch_finite(std::int64_t a, std::int64_t n, std::int64_t e = 1) {
    factors.push_back({ProductFactor::Kind::PochFinite, a, n, e});
    return *this;
  }

  friend bool operator==(const ProductExpr& x, const ProductExpr& y) {
    return x.coeff == y.coeff && x.qpow == y.qpow && x.factors == y.factors;
  }
};

/// Concatenation of factor lists; prefactors multiply.
ProductExpr operator*(const ProductExpr& x, const ProductExpr& y);

/// Lower to sign, shift and elementary factors; infinite products are cut at `prec`.
FactorAccumulator lower(const ProductExpr& expr, std::int64_t prec);

/// Evaluate on [total shift, prec).
template <class S>
LaurentSeries<S> eval_product_expr(const Ring& ring, const ProductExpr& expr, std::int64_t prec) {
  FactorAccumulator acc = lower(expr, prec);
  return expand<S>(ring, expr.coeff, acc, prec);
}

/// Sum of several product expressions, every term on [.., prec).
template <class S>
LaurentSeries<S> eval_product_sum(const Ring& ring, const std::vector<ProductExpr>& terms,
                                  std::int64_t prec) {
  LaurentSeries<S> total(ring, prec - 1, prec);
  for (const auto& t : terms) total = total + eval_product_expr<S>(ring, t, prec);
  return total;
}

/// Parse text such as "3 q^8 E(49)^4 P(2)^3 / E(7) P(1) P(3)^2" or
/// "P(2)^2/P(1)^3 + 2q^5 P(1)^2/P(2)^3". Everything after '/' is in the denominator.
/// P(a) expands with the given ell; J(a,M) is a general Jacobi product and
/// (a;M) a Pochhammer symbol (q^a; q^M)_inf. Throws std::invalid_argument on bad input.
std::vector<ProductExpr> parse_product_sum(std::string_view text, std::int64_t ell = 0);
ProductExpr parse_product(std::string_view text, std::int64_t ell = 0);

/// Canonical text of one expression; parse_product(to_string(e)) == e.
std::string to_string(const ProductExpr& expr);

}  // namespace qcong
