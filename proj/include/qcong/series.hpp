#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcong/ring.hpp"

namespace qcong {

/// Truncated Laurent series  sum_{low <= n < prec} c_n q^n  over a Ring.
///
/// `low` is a lower bound on the valuation: every coefficient below `low` is
/// zero. Coefficients at exponents >= `prec` are unknown, never zero, so every
/// operation returns only the window it can prove.
template <class Scalar>
class LaurentSeries {
 public:
  using scalar_type = Scalar;
  using Ops = ScalarOps<Scalar>;

  /// Zero series on [low, prec).
  LaurentSeries(Ring ring, std::int64_t low, std::int64_t prec) : ring_(ring), low_(low) {
    Ops::check(ring_);
    if (prec <= low) {
      throw WindowError("empty window [" + std::to_string(low) + ", " + std::to_string(prec) + ")");
    }
    coeffs_.assign(static_cast<std::size_t>(prec - low), Ops::zero(ring_));
  }

  /// Series with the given coefficients starting at `low`; values are reduced into the ring.
  LaurentSeries(Ring ring, std::int64_t low, std::vector<Scalar> coeffs)
      : ring_(ring), low_(low), coeffs_(std::move(coeffs)) {
    Ops::check(ring_);
    if (coeffs_.empty()) throw WindowError("empty coefficient window");
    for (auto& c : coeffs_) c = Ops::from(ring_, c);
  }

  static LaurentSeries monomial(Ring ring, const Integer& c, std::int64_t exponent,
                                std::int64_t prec) {
    LaurentSeries s(ring, std::min(exponent, prec - 1), prec);
    if (exponent < prec) s.at(exponent) = Ops::from(ring, c);
    return s;
  }

  static LaurentSeries one(Ring ring, std::int64_t prec) { return monomial(ring, 1, 0, prec); }

  /// Series from small integer coefficients, c[0] at exponent `low`.
  static LaurentSeries from_ints(Ring ring, std::int64_t low, std::initializer_list<long> c) {
    std::vector<Scalar> v;
    v.reserve(c.size());
    for (long x : c) v.push_back(Ops::from(ring, x));
    return LaurentSeries(ring, low, std::move(v));
  }

  const Ring& ring() const { return ring_; }
  std::int64_t low() const { return low_; }
  std::int64_t prec() const { return low_ + static_cast<std::int64_t>(coeffs_.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

  bool in_window(std::int64_t n) const { return n >= low_ && n < prec(); }

  /// Exact coefficient of q^n. Throws WindowError outside [low, prec).
  const Scalar& coeff(std::int64_t n) const {
    if (!in_window(n)) {
      throw WindowError("coefficient q^" + std::to_string(n) + " outside window [" +
                        std::to_string(low_) + ", " + std::to_string(prec()) + ")");
    }
    return coeffs_[static_cast<std::size_t>(n - low_)];
  }

  /// Coefficient of q^n, zero below the window. Throws above it.
  Scalar coeff_or_zero(std::int64_t n) const {
    if (n < low_) return Ops::zero(ring_);
    return coeff(n);
  }

  Scalar& at(std::int64_t n) {
    if (!in_window(n)) throw WindowError("write outside window at q^" + std::to_string(n));
    return coeffs_[static_cast<std::size_t>(n - low_)];
  }

  std::span<const Scalar> coeffs() const { return coeffs_; }
  std::vector<Scalar>& raw() { return coeffs_; }

  /// Exponent of the lowest nonzero coefficient in the window.
  std::optional<std::int64_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!Ops::is_zero(coeffs_[i])) return low_ + static_cast<std::int64_t>(i);
    }
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

 private:
  Ring ring_;
  std::int64_t low_;
  std::vector<Scalar> coeffs_;
};

using ZSeries = LaurentSeries<Integer>;
using ModSeries = LaurentSeries<Residue>;

namespace detail {

template <class S>
void require_same_ring(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  if (f.ring() != g.ring()) {
    throw RingMismatch("ring mismatch: " + f.ring().name() + " vs " + g.ring().name());
  }
}

template <class S>
std::vector<std::int64_t> nonzero_offsets(const LaurentSeries<S>& f, std::int64_t limit) {
  std::vector<std::int64_t> nz;
  auto c = f.coeffs();
  std::int64_t n = std::min<std::int64_t>(limit, f.size());
  for (std::int64_t i = 0; i < n; ++i) {
    if (!ScalarOps<S>::is_zero(c[static_cast<std::size_t>(i)])) nz.push_back(i);
  }
  return nz;
}

}  // namespace detail

/// Restrict to [low, new_prec); new_prec must not exceed the current prec.
template <class S>
LaurentSeries<S> truncate(const LaurentSeries<S>& f, std::int64_t new_prec) {
  if (new_prec > f.prec()) throw WindowError("cannot raise precision by truncation");
  if (new_prec <= f.low()) throw WindowError("truncation leaves an empty window");
  auto c = f.coeffs();
  return LaurentSeries<S>(f.ring(), f.low(),
                          std::vector<S>(c.begin(), c.begin() + (new_prec - f.low())));
}

/// Same series with the window extended downward to `new_low` (zeros below low are known).
template <class S>
LaurentSeries<S> extend_low(const LaurentSeries<S>& f, std::int64_t new_low) {
  if (new_low >= f.low()) return f;
  LaurentSeries<S> r(f.ring(), new_low, f.prec());
  std::copy(f.coeffs().begin(), f.coeffs().end(), r.raw().begin() + (f.low() - new_low));
  return r;
}

template <class S>
LaurentSeries<S> shift(const LaurentSeries<S>& f, std::int64_t s) {
  return LaurentSeries<S>(f.ring(), f.low() + s, std::vector<S>(f.coeffs().begin(), f.coeffs().end()));
}

template <class S>
LaurentSeries<S> operator-(const LaurentSeries<S>& f) {
  LaurentSeries<S> r = f;
  for (auto& c : r.raw()) c = ScalarOps<S>::neg(f.ring(), c);
  return r;
}

template <class S>
LaurentSeries<S> scale(const LaurentSeries<S>& f, const Integer& c) {
  S k = ScalarOps<S>::from(f.ring(), c);
  LaurentSeries<S> r = f;
  for (auto& x : r.raw()) x = ScalarOps<S>::mul(f.ring(), x, k);
  return r;
}

namespace detail {

template <class S, bool Subtract>
LaurentSeries<S> add_sub(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  require_same_ring(f, g);
  std::int64_t low = std::min(f.low(), g.low());
  std::int64_t prec = std::min(f.prec(), g.prec());
  LaurentSeries<S> r(f.ring(), low, prec);
  for (std::int64_t n = std::max(low, f.low()); n < prec; ++n) r.at(n) = f.coeff(n);
  for (std::int64_t n = std::max(low, g.low()); n < prec; ++n) {
    if constexpr (Subtract) {
      ScalarOps<S>::sub_from(f.ring(), r.at(n), g.coeff(n));
    } else {
      ScalarOps<S>::add_to(f.ring(), r.at(n), g.coeff(n));
    }
  }
  return r;
}

}  // namespace detail

/// Sum on the provable window [min(low), min(prec)).
template <class S>
LaurentSeries<S> operator+(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  return detail::add_sub<S, false>(f, g);
}

template <class S>
LaurentSeries<S> operator-(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  return detail::add_sub<S, true>(f, g);
}

namespace detail {

inline void mul_kernel(const Ring&, std::vector<Integer>& out, std::span<const Integer> f,
                       const std::vector<std::int64_t>& fnz, std::span<const Integer> g,
                       const std::vector<std::int64_t>& gnz) {
  const auto len = static_cast<std::int64_t>(out.size());
  for (std::int64_t i : fnz) {
    const Integer& a = f[static_cast<std::size_t>(i)];
    for (std::int64_t j : gnz) {
      if (i + j >= len) break;
      mpz_addmul(out[static_cast<std::size_t>(i + j)].get_mpz_t(), a.get_mpz_t(),
                 g[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
}

inline void mul_kernel(const Ring& ring, std::vector<Residue>& out, std::span<const Residue> f,
                       const std::vector<std::int64_t>& fnz, std::span<const Residue> g,
                       const std::vector<std::int64_t>& gnz) {
  const std::int64_t m = ring.modulus();
  const auto len = static_cast<std::int64_t>(out.size());
  // Accumulate unreduced; flush before any slot could overflow.
  const std::int64_t sq = (m - 1) * (m - 1);
  const std::int64_t budget = sq == 0 ? std::numeric_limits<std::int64_t>::max()
                                      : (std::numeric_limits<std::int64_t>::max() - m) / sq;
  std::int64_t pending = 0;
  for (std::int64_t i : fnz) {
    const Residue a = f[static_cast<std::size_t>(i)];
    for (std::int64_t j : gnz) {
      if (i + j >= len) break;
      out[static_cast<std::size_t>(i + j)] += a * g[static_cast<std::size_t>(j)];
    }
    if (++pending >= budget) {
      for (auto& x : out) x %= m;
      pending = 0;
    }
  }
  for (auto& x : out) x %= m;
}

}  // namespace detail

/// Product on [f.low + g.low, min(f.low + g.prec, g.low + f.prec)).
template <class S>
LaurentSeries<S> operator*(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  detail::require_same_ring(f, g);
  const std::int64_t low = f.low() + g.low();
  const std::int64_t prec = std::min(f.low() + g.prec(), g.low() + f.prec());
  LaurentSeries<S> r(f.ring(), low, prec);
  const std::int64_t len = prec - low;
  auto fnz = detail::nonzero_offsets(f, len);
  auto gnz = detail::nonzero_offsets(g, len);
  detail::mul_kernel(f.ring(), r.raw(), f.coeffs(), fnz, g.coeffs(), gnz);
  return r;
}

/// Multiplicative inverse. The lowest nonzero coefficient must be a unit.
/// For f = q^v h on [low, prec) the result lives on [-v, prec - 2v).
template <class S>
LaurentSeries<S> invert(const LaurentSeries<S>& f) {
  using Ops = ScalarOps<S>;
  const Ring& ring = f.ring();
  auto v = f.valuation();
  if (!v) throw NotInvertible("cannot invert a series that is zero on its window");
  const std::int64_t len = f.prec() - *v;
  auto c = f.coeffs();
  const std::size_t off = static_cast<std::size_t>(*v - f.low());
  const S& lead = c[off];
  if (!Ops::is_unit(ring, lead)) throw NotInvertible("leading coefficient is not a unit");
  const S lead_inv = Ops::inverse(ring, lead);

  std::vector<std::int64_t> hnz;
  for (std::int64_t i = 1; i < len; ++i) {
    if (!Ops::is_zero(c[off + static_cast<std::size_t>(i)])) hnz.push_back(i);
  }
  std::vector<S> g(static_cast<std::size_t>(len), Ops::zero(ring));
  g[0] = lead_inv;
  for (std::int64_t n = 1; n < len; ++n) {
    S acc = Ops::zero(ring);
    for (std::int64_t i : hnz) {
      if (i > n) break;
      Ops::add_to(ring, acc, Ops::mul(ring, c[off + static_cast<std::size_t>(i)],
                                      g[static_cast<std::size_t>(n - i)]));
    }
    g[static_cast<std::size_t>(n)] = Ops::neg(ring, Ops::mul(ring, acc, lead_inv));
  }
  return LaurentSeries<S>(ring, -*v, std::move(g));
}

/// Substitution q -> q^k; the window [low, prec) maps to [k*low, k*(prec-1)+1).
template <class S>
LaurentSeries<S> subst_pow(const LaurentSeries<S>& f, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("subst_pow requires k >= 1");
  LaurentSeries<S> r(f.ring(), k * f.low(), k * (f.prec() - 1) + 1);
  for (std::int64_t n = f.low(); n < f.prec(); ++n) r.at(k * n) = f.coeff(n);
  return r;
}

/// Coefficientwise canonical reduction into Z/m; the window is preserved.
inline ModSeries reduce_mod(const ZSeries& f, std::int64_t m) {
  Ring ring = Ring::mod(m);
  std::vector<Residue> c;
  c.reserve(static_cast<std::size_t>(f.size()));
  for (const auto& x : f.coeffs()) c.push_back(ScalarOps<Residue>::from(ring, x));
  return ModSeries(ring, f.low(), std::move(c));
}

inline ModSeries reduce_mod(const ModSeries& f, std::int64_t m) {
  if (f.ring().modulus() % m != 0) {
    throw RingMismatch("cannot reduce " + f.ring().name() + " to Z/" + std::to_string(m));
  }
  Ring ring = Ring::mod(m);
  std::vector<Residue> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) x %= m;
  return ModSeries(ring, f.low(), std::move(c));
}

/// ell-dissection: components f_j with f(q) = sum_j q^j f_j(q^ell) on the window.
/// Negative exponents are classified by their mathematical residue.
template <class S>
std::vector<LaurentSeries<S>> dissect(const LaurentSeries<S>& f, std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("dissect requires ell >= 1");
  std::vector<LaurentSeries<S>> parts;
  parts.reserve(static_cast<std::size_t>(ell));
  for (std::int64_t j = 0; j < ell; ++j) {
    std::int64_t prec_j = ceil_div(f.prec() - j, ell);
    std::int64_t low_j = std::min(ceil_div(f.low() - j, ell), prec_j - 1);
    LaurentSeries<S> part(f.ring(), low_j, prec_j);
    for (std::int64_t n = low_j; n < prec_j; ++n) part.at(n) = f.coeff_or_zero(ell * n + j);
    parts.push_back(std::move(part));
  }
  return parts;
}

/// Exact coefficient of q^n; WindowError outside [low, prec).
template <class S>
const S& coeff(const LaurentSeries<S>& f, std::int64_t n) {
  return f.coeff(n);
}

/// First exponent in [min(low), min(prec)) where f and g differ, zeros below each low.
template <class S>
std::optional<std::int64_t> first_difference(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  detail::require_same_ring(f, g);
  const std::int64_t hi = std::min(f.prec(), g.prec());
  for (std::int64_t n = std::min(f.low(), g.low()); n < hi; ++n) {
    if (f.coeff_or_zero(n) != g.coeff_or_zero(n)) return n;
  }
  return std::nullopt;
}

template <class S>
bool equal_on_window(const LaurentSeries<S>& f, const LaurentSeries<S>& g) {
  return !first_difference(f, g).has_value();
}

template <class S>
std::string to_string(const LaurentSeries<S>& f, std::int64_t max_terms = 12) {
  std::string out;
  std::int64_t shown = 0;
  for (std::int64_t n = f.low(); n < f.prec() && shown < max_terms; ++n) {
    const auto c = ScalarOps<S>::to_integer(f.ring(), f.coeff(n));
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    Integer a = abs(c);
    if (a != 1 || n == 0) out += a.get_str();
    if (n != 0) out += (a != 1 ? "*q" : "q") + (n != 1 ? "^" + std::to_string(n) : std::string());
    ++shown;
  }
  if (out.empty()) out = "0";
  return out + " + O(q^" + std::to_string(f.prec()) + ")";
}

template <class S>
std::ostream& operator<<(std::ostream& os, const LaurentSeries<S>& f) {
  return os << to_string(f);
}

}  // namespace qcong
