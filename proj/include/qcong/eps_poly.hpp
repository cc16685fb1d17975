#pragma once

#include <array>

#include "qcong/series.hpp"

namespace qcong {

/// Element a0 + a1*eps + a2*eps^2 of R[eps]/(eps^3), R a ring of truncated series.
/// Evaluating g(x0 + eps) gives g(x0) + g'(x0) eps + g''(x0)/2 eps^2.
template <class S>
struct EpsPoly {
  std::array<LaurentSeries<S>, 3> part;

  EpsPoly(LaurentSeries<S> a0, LaurentSeries<S> a1, LaurentSeries<S> a2)
      : part{std::move(a0), std::move(a1), std::move(a2)} {}

  /// The constant c (no eps part).
  static EpsPoly constant(const LaurentSeries<S>& c) {
    LaurentSeries<S> z(c.ring(), c.low(), c.prec());
    return EpsPoly(c, z, z);
  }

  /// x0 + eps.
  static EpsPoly variable_at(const LaurentSeries<S>& x0) {
    LaurentSeries<S> z(x0.ring(), x0.low(), x0.prec());
    LaurentSeries<S> one = LaurentSeries<S>::monomial(x0.ring(), 1, 0, x0.prec());
    return EpsPoly(x0, extend_low(one, x0.low()), z);
  }

  /// g''(x0) when this holds g(x0 + eps).
  LaurentSeries<S> second_derivative() const { return scale(part[2], 2); }
};

template <class S>
EpsPoly<S> operator+(const EpsPoly<S>& a, const EpsPoly<S>& b) {
  return EpsPoly<S>(a.part[0] + b.part[0], a.part[1] + b.part[1], a.part[2] + b.part[2]);
}

template <class S>
EpsPoly<S> operator-(const EpsPoly<S>& a, const EpsPoly<S>& b) {
  return EpsPoly<S>(a.part[0] - b.part[0], a.part[1] - b.part[1], a.part[2] - b.part[2]);
}

template <class S>
EpsPoly<S> operator*(const EpsPoly<S>& a, const EpsPoly<S>& b) {
  return EpsPoly<S>(a.part[0] * b.part[0],
                    a.part[0] * b.part[1] + a.part[1] * b.part[0],
                    a.part[0] * b.part[2] + a.part[1] * b.part[1] + a.part[2] * b.part[0]);
}

template <class S>
EpsPoly<S> operator*(const EpsPoly<S>& a, const LaurentSeries<S>& c) {
  return EpsPoly<S>(a.part[0] * c, a.part[1] * c, a.part[2] * c);
}

/// 1/(a0 + a1 e + a2 e^2) = u (1 - (a1 u) e + ((a1 u)^2 - a2 u) e^2), u = 1/a0.
template <class S>
EpsPoly<S> invert(const EpsPoly<S>& a) {
  LaurentSeries<S> u = invert(a.part[0]);
  LaurentSeries<S> r = a.part[1] * u;
  LaurentSeries<S> s = a.part[2] * u;
  return EpsPoly<S>(u, -(u * r), u * (r * r - s));
}

}  // namespace qcong
