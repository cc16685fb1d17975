#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct FirstFailure {
  std::int64_t exponent;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one instance inside a check (one identity at one parameter point).
struct CaseResult {
  CaseResult() = default;
  explicit CaseResult(std::string l) : label(std::move(l)) {}

  std::string label;
  Status status = Status::Pass;
  std::int64_t window_low = 0;
  std::int64_t window_high = 0;
  std::optional<FirstFailure> first_failure;
  std::string note;
};

struct Report {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> params;
  std::int64_t prec = 0;
  Status status = Status::Pass;
  std::optional<FirstFailure> first_failure;
  std::string first_failure_case;
  double wall_time_s = 0;
  bool informational = false;
  std::vector<CaseResult> cases;

  void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
  void param(const std::string& k, std::int64_t v) { params.emplace_back(k, std::to_string(v)); }

  void add(CaseResult c) { cases.push_back(std::move(c)); }

  /// Status from the cases: Fail if any failed, Skipped if every case was skipped.
  void finalize();

  std::size_t count(Status s) const;
};

/// Minimal overlap for a comparison to count, as a fraction of prec.
inline constexpr double kMinOverlapFraction = 0.5;

/// Compare lhs and rhs on their common window [min low, min prec).
/// The case is Skipped when that window is narrower than min_width.
template <class S>
CaseResult compare_series(const std::string& label, const LaurentSeries<S>& lhs,
                          const LaurentSeries<S>& rhs, std::int64_t min_width = 0) {
  CaseResult c;
  c.label = label;
  c.window_low = std::min(lhs.low(), rhs.low());
  c.window_high = std::min(lhs.prec(), rhs.prec());
  if (c.window_high - std::max<std::int64_t>(c.window_low, 0) < min_width) {
    c.status = Status::Skipped;
    c.note = "overlap window too narrow";
    return c;
  }
  if (auto d = first_difference(lhs, rhs)) {
    c.status = Status::Fail;
    c.first_failure = FirstFailure{*d,
                                   ScalarOps<S>::to_integer(lhs.ring(), lhs.coeff_or_zero(*d)).get_str(),
                                   ScalarOps<S>::to_integer(rhs.ring(), rhs.coeff_or_zero(*d)).get_str()};
  }
  return c;
}

/// Times a check body and stamps the wall time.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// One JSON object; wall_time omitted when deterministic.
std::string to_json(const Report& r, bool deterministic, bool with_cases = true);
void write_csv(std::ostream& os, const std::vector<Report>& reports);

}  // namespace qcong
