#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcong/products.hpp"
#include "qcong/lambert.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// A partition as a non-increasing list of parts.
using Partition = std::vector<int>;

/// s(pi): none for the empty partition, standing for +infinity.
inline std::optional<int> smallest_part(const Partition& p) {
  if (p.empty()) return std::nullopt;
  return p.back();
}

/// l(pi): 0 for the empty partition.
inline int largest_part(const Partition& p) { return p.empty() ? 0 : p.front(); }

enum class Variant { U, V };

/// Admissibility of (pi1, pi2, pi3, pi4) for u(n) or v(n).
struct QuadrupleConstraint {
  Variant variant;

  bool admits(const Partition& p1, const Partition& p2, const Partition& p3,
              const Partition& p4) const;
};

/// All partitions of n, each non-increasing, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// p(n) by the pentagonal recurrence; p_table returns p(0..n_max).
std::vector<Integer> p_table(int n_max);
Integer p_count(int n);

/// u(n), v(n) by summing over the smallest part m of pi1 and convolving the four
/// independent part-range counts.
Integer u_count(int n);
Integer v_count(int n);
Integer uv_count(Variant variant, int n);

/// Literal enumeration of all quadruples; exponential, for small n only.
Integer quadruple_count_brute(Variant variant, int n);

enum class Origin { Enumerated, SeriesDef, SeriesLambert };

std::string to_string(Origin o);

struct SequenceTable {
  std::string name;
  std::vector<Integer> values;
  Origin origin;

  /// "# name n_max origin" then one value per line.
  void write(std::ostream& os) const;
};

/// U(q), V(q) from the smallest-part sums
///   sum_n q^n / ((q^n;q)_inf^3 (q^n;q)_{n+1})   and the same with q^{2n},
/// on [0, prec). Runs a descending recurrence G_n = G_{n+1} / (1 - q^n)^3.
template <class S>
std::pair<LaurentSeries<S>, LaurentSeries<S>> uv_series_def(const Ring& ring, std::int64_t prec) {
  using Ops = ScalarOps<S>;
  if (prec < 1) throw std::invalid_argument("uv_series_def needs prec >= 1");
  std::vector<S> U(static_cast<std::size_t>(prec), Ops::zero(ring));
  std::vector<S> V(static_cast<std::size_t>(prec), Ops::zero(ring));
  std::vector<S> G(static_cast<std::size_t>(prec), Ops::zero(ring));
  G[0] = Ops::from(ring, 1L);
  std::vector<S> work;

  auto add_term = [&](std::vector<S>& out, std::int64_t n, std::int64_t offset) {
    const std::int64_t len = prec - offset;
    if (len <= 0) return;
    work.assign(G.begin(), G.begin() + len);
    for (std::int64_t j = n; j <= 2 * n && j < len; ++j) detail::div_one_minus(ring, work, j);
    for (std::int64_t i = 0; i < len; ++i) {
      Ops::add_to(ring, out[static_cast<std::size_t>(offset + i)], work[static_cast<std::size_t>(i)]);
    }
  };

  for (std::int64_t n = prec - 1; n >= 1; --n) {
    for (int t = 0; t < 3; ++t) detail::div_one_minus(ring, G, n);
    add_term(U, n, n);
    add_term(V, n, 2 * n);
  }
  return {LaurentSeries<S>(ring, 0, std::move(U)), LaurentSeries<S>(ring, 0, std::move(V))};
}

/// U, V as -(1/E(1)^3) times the half-weight double-pole sums.
template <class S>
std::pair<LaurentSeries<S>, LaurentSeries<S>> uv_series_lambert(const Ring& ring, std::int64_t prec) {
  auto build = [&](PoleWeight w) {
    LaurentSeries<S> d = -double_pole_sum<S>(ring, w, prec, true);
    auto& c = d.raw();
    for (std::int64_t j = 1; j < prec; ++j) {
      for (int t = 0; t < 3; ++t) detail::div_one_minus(ring, c, j);
    }
    return d;
  };
  return {build(PoleWeight::NTimesNPlus1), build(PoleWeight::NTimesNMinus1)};
}

/// F(q) = 1 + sum_n q^n / (q^n; q)_inf.
template <class S>
LaurentSeries<S> f_series_smallest_part(const Ring& ring, std::int64_t prec) {
  using Ops = ScalarOps<S>;
  std::vector<S> F(static_cast<std::size_t>(prec), Ops::zero(ring));
  std::vector<S> G(static_cast<std::size_t>(prec), Ops::zero(ring));
  F[0] = Ops::from(ring, 1L);
  G[0] = Ops::from(ring, 1L);
  for (std::int64_t n = prec - 1; n >= 1; --n) {
    detail::div_one_minus(ring, G, n);
    for (std::int64_t i = 0; i + n < prec; ++i) {
      Ops::add_to(ring, F[static_cast<std::size_t>(i + n)], G[static_cast<std::size_t>(i)]);
    }
  }
  return LaurentSeries<S>(ring, 0, std::move(F));
}

}  // namespace qcong
