#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// multiplier * q^qshift * T(q^a, q^b, q^c).
struct LambertSpec {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;
  Integer multiplier = 1;
  std::int64_t qshift = 0;
};

/// Integer square root, floor.
inline std::int64_t isqrt(std::int64_t x) {
  if (x <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// Every n with |n| > bound has c n(n+1)/2 + b n >= prec.
/// From c n^2/2 - (|b| + c/2)|n| >= prec; the +2 and the rounded-up B give slack.
inline std::int64_t bilateral_bound(std::int64_t b, std::int64_t c, std::int64_t prec,
                                    std::int64_t extra = 0) {
  const std::int64_t B = std::abs(b) + c;
  return 2 + (B + isqrt(B * B + 2 * c * std::max<std::int64_t>(prec, 0)) + 1) / c + extra;
}

/// Accumulates terms  w * q^E / (1 - q^d)^order  on a fixed window.
/// The only place where denominators with d < 0 are rewritten:
///   1/(1 - q^{-m})   = -q^m     / (1 - q^m)
///   1/(1 - q^{-m})^2 =  q^{2m}  / (1 - q^m)^2
template <class S>
class LambertAccumulator {
 public:
  using Ops = ScalarOps<S>;

  LambertAccumulator(Ring ring, std::int64_t low, std::int64_t prec)
      : ring_(ring), low_(low), prec_(prec),
        c_(static_cast<std::size_t>(std::max<std::int64_t>(prec - low, 0)), Ops::zero(ring)) {
    if (prec <= low) throw WindowError("empty Lambert window");
  }

  /// Lowest exponent the term reaches.
  static std::int64_t start(std::int64_t E, std::int64_t d, int order) {
    return d > 0 ? E : E - order * d;
  }

  void add_term(const Integer& w, std::int64_t E, std::int64_t d, int order) {
    if (d == 0) throw std::domain_error("Lambert term with vanishing denominator");
    if (sgn(w) == 0) return;
    std::int64_t step = d > 0 ? d : -d;
    std::int64_t x = start(E, d, order);
    if (x >= prec_) return;
    if (x < low_) {
      throw WindowError("Lambert term starts at q^" + std::to_string(x) + " below window low " +
                        std::to_string(low_));
    }
    S base = Ops::from(ring_, (order == 1 && d < 0) ? Integer(-w) : w);
    if (order == 1) {
      for (; x < prec_; x += step) Ops::add_to(ring_, c_[static_cast<std::size_t>(x - low_)], base);
    } else {
      S k = base;
      for (; x < prec_; x += step) {
        Ops::add_to(ring_, c_[static_cast<std::size_t>(x - low_)], k);
        Ops::add_to(ring_, k, base);
      }
    }
  }

  LaurentSeries<S> finish() && { return LaurentSeries<S>(ring_, low_, std::move(c_)); }

 private:
  Ring ring_;
  std::int64_t low_;
  std::int64_t prec_;
  std::vector<S> c_;
};

namespace detail {

/// One bilateral term list (weight, E, d) over |n| <= N; low resolved from the terms if absent.
template <class S, class TermFn>
LaurentSeries<S> bilateral(const Ring& ring, std::int64_t N, std::int64_t prec,
                           std::optional<std::int64_t> low, int order, TermFn term) {
  struct Term {
    Integer w;
    std::int64_t E, d;
  };
  std::vector<Term> terms;
  std::int64_t lo = prec - 1;
  for (std::int64_t n = -N; n <= N; ++n) {
    Term t{0, 0, 0};
    if (!term(n, t.w, t.E, t.d)) continue;
    std::int64_t s = LambertAccumulator<S>::start(t.E, t.d, order);
    if (s >= prec) continue;
    lo = std::min(lo, s);
    terms.push_back(std::move(t));
  }
  LambertAccumulator<S> acc(ring, low.value_or(lo), prec);
  for (const auto& t : terms) acc.add_term(t.w, t.E, t.d, order);
  return std::move(acc).finish();
}

}  // namespace detail

/// T(q^a, q^b, q^c) = sum_n (-1)^n q^{c n(n+1)/2 + b n} / (1 - q^{c n + a}) on [low, prec).
/// Without `low` the window starts at the lowest exponent any term reaches.
/// `extra_terms` widens the n-range; tests use it to confirm the bound is sufficient.
template <class S>
LaurentSeries<S> t_series(const Ring& ring, std::int64_t a, std::int64_t b, std::int64_t c,
                          std::int64_t prec, std::optional<std::int64_t> low = std::nullopt,
                          std::int64_t extra_terms = 0) {
  if (c < 1) throw std::invalid_argument("T(a,b,c) needs c >= 1");
  if (floor_mod(a, c) == 0) throw std::domain_error("T(a,b,c) has a pole: a = 0 mod c");
  // the start exponent of a term is at least c n(n+1)/2 + b n
  const std::int64_t N = bilateral_bound(b, c, prec, extra_terms);
  return detail::bilateral<S>(ring, N, prec, low, 1,
                              [&](std::int64_t n, Integer& w, std::int64_t& E, std::int64_t& d) {
                                w = (n % 2 == 0) ? 1 : -1;
                                E = c * n * (n + 1) / 2 + b * n;
                                d = c * n + a;
                                return true;
                              });
}

template <class S>
LaurentSeries<S> eval_lambert(const Ring& ring, const LambertSpec& spec, std::int64_t prec,
                              std::optional<std::int64_t> low = std::nullopt) {
  std::optional<std::int64_t> inner_low;
  if (low) inner_low = *low - spec.qshift;
  auto t = t_series<S>(ring, spec.a, spec.b, spec.c, prec - spec.qshift, inner_low);
  return scale(shift(t, spec.qshift), spec.multiplier);
}

/// S_ell(b) = sum'_{n != 0} (-1)^n q^{n(n+1)/2 + b n} n(n+1) / (1 - q^{ell n}).
template <class S>
LaurentSeries<S> s_series(const Ring& ring, std::int64_t ell, std::int64_t b, std::int64_t prec,
                          std::optional<std::int64_t> low = std::nullopt,
                          std::int64_t extra_terms = 0) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("S_ell(b) needs odd ell >= 3");
  const std::int64_t N = bilateral_bound(b, 1, prec, extra_terms);
  return detail::bilateral<S>(ring, N, prec, low, 1,
                              [&](std::int64_t n, Integer& w, std::int64_t& E, std::int64_t& d) {
                                if (n == 0) return false;
                                w = Integer(static_cast<long>(n * (n + 1)));
                                if (n % 2 != 0) w = -w;
                                E = n * (n + 1) / 2 + b * n;
                                d = ell * n;
                                return true;
                              });
}

enum class PoleWeight { NTimesNPlus1, NTimesNMinus1 };

/// sum'_{n != 0} (-1)^n q^{n(n+1)/2} w(n) / (1 - q^n)^2 with w = n(n+1) or n(n-1),
/// halved when `half` (both weights are always even).
template <class S>
LaurentSeries<S> double_pole_sum(const Ring& ring, PoleWeight weight, std::int64_t prec,
                                 bool half = false, std::int64_t extra_terms = 0) {
  const std::int64_t N = bilateral_bound(0, 1, prec, extra_terms);
  return detail::bilateral<S>(ring, N, prec, std::int64_t{0}, 2,
                              [&](std::int64_t n, Integer& w, std::int64_t& E, std::int64_t& d) {
                                if (n == 0) return false;
                                std::int64_t v = weight == PoleWeight::NTimesNPlus1 ? n * (n + 1)
                                                                                    : n * (n - 1);
                                if (half) v /= 2;
                                w = Integer(static_cast<long>(n % 2 == 0 ? v : -v));
                                E = n * (n + 1) / 2;
                                d = n;
                                return true;
                              });
}

}  // namespace qcong
