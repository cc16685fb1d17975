#pragma once

// Helpers shared by the check implementations.

#include <string>
#include <utility>

#include "qcong/checks.hpp"
#include "qcong/partitions.hpp"
#include "qcong/products.hpp"

namespace qcong::detail {

inline const Ring& ZZ() {
  static const Ring r = Ring::integers();
  return r;
}

inline std::int64_t min_width(std::int64_t prec) {
  return static_cast<std::int64_t>(static_cast<double>(prec) * kMinOverlapFraction);
}

template <class S>
CaseResult compare(const std::string& label, const LaurentSeries<S>& lhs, const LaurentSeries<S>& rhs,
                   std::int64_t prec) {
  return compare_series(label, lhs, rhs, min_width(prec));
}

/// U and V from the definition, mod m, memoised per (m, prec) for reuse across checks.
std::pair<ModSeries, ModSeries> uv_mod(std::int64_t m, std::int64_t prec);

inline Integer minus_half(std::int64_t ell) { return -Integer(static_cast<long>(inverse_mod(2, ell))); }

/// f * g, with g produced to exactly the precision f's window needs.
template <class S, class Make>
LaurentSeries<S> times_to(const LaurentSeries<S>& f, Make make_g, std::int64_t prec) {
  return truncate(f * make_g(prec - f.low()), std::min(prec, f.prec()));
}

inline Report start_report(const std::string& id, std::int64_t prec) {
  Report r;
  r.check_id = id;
  r.prec = prec;
  return r;
}

inline std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace qcong::detail
