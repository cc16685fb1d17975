#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// [q^a; q^M] = sign * q^shift * [q^r; q^M] with 0 < r < M.
struct JacobiNormal {
  int sign;
  std::int64_t shift;
  std::int64_t r;
};

/// Reduce a by the functional equation [q^{a+M}; q^M] = -q^{-a} [q^a; q^M].
inline JacobiNormal normalize_jacobi(std::int64_t a, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("Jacobi product needs M >= 1");
  const std::int64_t r = floor_mod(a, M);
  if (r == 0) {
    throw std::domain_error("[q^" + std::to_string(a) + "; q^" + std::to_string(M) +
                            "] vanishes identically");
  }
  const std::int64_t k = floor_div(a, M);
  JacobiNormal out{1, 0, r};
  // k steps up from r (k > 0) or down from r (k < 0)
  for (std::int64_t i = 0; i < k; ++i) {
    out.sign = -out.sign;
    out.shift -= r + i * M;
  }
  for (std::int64_t i = k; i < 0; ++i) {
    out.sign = -out.sign;
    out.shift += r + i * M;
  }
  return out;
}

/// Multiset of elementary factors (1 - q^e)^mult, plus sign and q-shift.
/// Everything in this module lowers to this form before any coefficient work.
class FactorAccumulator {
 public:
  void times_one_minus(std::int64_t e, std::int64_t mult) {
    if (mult == 0) return;
    if (e == 0) {
      if (mult < 0) throw NotInvertible("division by (1 - q^0)");
      vanishes_ = true;
      return;
    }
    if (e < 0) {  // 1 - q^{-k} = -q^{-k}(1 - q^k)
      if (mult % 2 != 0) sign_ = -sign_;
      shift_ += e * mult;
      e = -e;
    }
    counts_[e] += mult;
  }

  /// (q^a; q^M)_inf restricted to factors that can reach below `limit`.
  void times_poch_inf(std::int64_t a, std::int64_t M, std::int64_t mult, std::int64_t limit) {
    if (a < 1 || M < 1) throw std::invalid_argument("(q^a; q^M)_inf needs a >= 1 and M >= 1");
    for (std::int64_t e = a; e < limit; e += M) times_one_minus(e, mult);
  }

  void times_poch_finite(std::int64_t a, std::int64_t n, std::int64_t mult) {
    if (n < 0) throw std::invalid_argument("finite Pochhammer length must be >= 0");
    for (std::int64_t j = 0; j < n; ++j) times_one_minus(a + j, mult);
  }

  void times_monomial(int sign, std::int64_t shift) {
    sign_ *= sign;
    shift_ += shift;
  }

  int sign() const { return sign_; }
  std::int64_t shift() const { return shift_; }
  bool vanishes() const { return vanishes_; }
  const std::map<std::int64_t, std::int64_t>& counts() const { return counts_; }

 private:
  int sign_ = 1;
  std::int64_t shift_ = 0;
  bool vanishes_ = false;
  std::map<std::int64_t, std::int64_t> counts_;
};

namespace detail {

/// c <- c * (1 - q^e) on a window starting at exponent 0.
template <class S>
void mul_one_minus(const Ring& ring, std::vector<S>& c, std::int64_t e) {
  for (auto i = static_cast<std::int64_t>(c.size()) - 1; i >= e; --i) {
    const auto& src = c[static_cast<std::size_t>(i - e)];
    if (!ScalarOps<S>::is_zero(src)) ScalarOps<S>::sub_from(ring, c[static_cast<std::size_t>(i)], src);
  }
}

/// c <- c / (1 - q^e).
template <class S>
void div_one_minus(const Ring& ring, std::vector<S>& c, std::int64_t e) {
  for (auto i = e; i < static_cast<std::int64_t>(c.size()); ++i) {
    const auto& src = c[static_cast<std::size_t>(i - e)];
    if (!ScalarOps<S>::is_zero(src)) ScalarOps<S>::add_to(ring, c[static_cast<std::size_t>(i)], src);
  }
}

}  // namespace detail

/// Expand coeff * acc on the window [shift, prec).
template <class S>
LaurentSeries<S> expand(const Ring& ring, const Integer& coeff, const FactorAccumulator& acc,
                        std::int64_t prec) {
  using Ops = ScalarOps<S>;
  const std::int64_t shift = acc.shift();
  const std::int64_t len = prec - shift;
  if (len <= 0 || acc.vanishes() || sgn(coeff) == 0) {
    // Nothing is known to be nonzero below prec.
    return LaurentSeries<S>(ring, std::min(shift, prec - 1), prec);
  }
  std::vector<S> c(static_cast<std::size_t>(len), Ops::zero(ring));
  c[0] = Ops::from(ring, acc.sign() < 0 ? Integer(-coeff) : coeff);
  for (const auto& [e, mult] : acc.counts()) {
    if (e >= len) continue;
    for (std::int64_t t = 0; t < mult; ++t) detail::mul_one_minus(ring, c, e);
  }
  for (const auto& [e, mult] : acc.counts()) {
    if (e >= len) continue;
    for (std::int64_t t = 0; t < -mult; ++t) detail::div_one_minus(ring, c, e);
  }
  return LaurentSeries<S>(ring, shift, std::move(c));
}

/// (q^a; q^M)_inf on [0, prec).
template <class S>
LaurentSeries<S> pochhammer_inf(const Ring& ring, std::int64_t a, std::int64_t M, std::int64_t prec) {
  FactorAccumulator acc;
  acc.times_poch_inf(a, M, 1, prec);
  return expand<S>(ring, 1, acc, prec);
}

/// prod_{j<n} (1 - q^{a+j}); a may be <= 0, giving a Laurent polynomial (or zero).
template <class S>
LaurentSeries<S> pochhammer_finite(const Ring& ring, std::int64_t a, std::int64_t n, std::int64_t prec) {
  FactorAccumulator acc;
  acc.times_poch_finite(a, n, 1);
  return expand<S>(ring, 1, acc, prec);
}

/// E(a) = (q^a; q^a)_inf.
template <class S>
LaurentSeries<S> euler_E(const Ring& ring, std::int64_t a, std::int64_t prec) {
  return pochhammer_inf<S>(ring, a, a, prec);
}

/// [q^a; q^M]_inf = (q^a; q^M)_inf (q^{M-a}; q^M)_inf, normalized for any a not divisible by M.
template <class S>
LaurentSeries<S> jacobi_theta(const Ring& ring, std::int64_t a, std::int64_t M, std::int64_t prec) {
  JacobiNormal n = normalize_jacobi(a, M);
  FactorAccumulator acc;
  acc.times_monomial(n.sign, n.shift);
  acc.times_poch_inf(n.r, M, 1, prec - n.shift);
  acc.times_poch_inf(M - n.r, M, 1, prec - n.shift);
  return expand<S>(ring, 1, acc, prec);
}

/// P(a) = [q^{ell a}; q^{ell^2}]_inf.
template <class S>
LaurentSeries<S> cap_P(const Ring& ring, std::int64_t a, std::int64_t ell, std::int64_t prec) {
  if (floor_mod(a, ell) == 0) throw std::domain_error("P(a) needs a not divisible by ell");
  return jacobi_theta<S>(ring, ell * a, ell * ell, prec);
}

}  // namespace qcong
