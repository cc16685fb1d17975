#include "qcong/report.hpp"

#include <json.hpp>

namespace qcong {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

void Report::finalize() {
  first_failure.reset();
  first_failure_case.clear();
  bool any_run = cases.empty();
  status = Status::Pass;
  for (const auto& c : cases) {
    if (c.status != Status::Skipped) any_run = true;
    if (c.status == Status::Fail && status != Status::Fail) {
      status = Status::Fail;
      first_failure = c.first_failure;
      first_failure_case = c.label;
    }
  }
  if (!any_run) status = Status::Skipped;
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.status == s;
  return n;
}

namespace {

nlohmann::ordered_json failure_json(const std::optional<FirstFailure>& f) {
  if (!f) return nullptr;
  return {{"exponent", f->exponent}, {"lhs", f->lhs}, {"rhs", f->rhs}};
}

}  // namespace

std::string to_json(const Report& r, bool deterministic, bool with_cases) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["prec"] = r.prec;
  j["status"] = to_string(r.status);
  j["informational"] = r.informational;
  j["first_failure"] = failure_json(r.first_failure);
  if (r.first_failure) j["first_failure_case"] = r.first_failure_case;
  j["cases_total"] = r.cases.size();
  j["cases_passed"] = r.count(Status::Pass);
  j["cases_failed"] = r.count(Status::Fail);
  j["cases_skipped"] = r.count(Status::Skipped);
  if (with_cases) {
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
      nlohmann::ordered_json cj;
      cj["label"] = c.label;
      cj["status"] = to_string(c.status);
      cj["window"] = {c.window_low, c.window_high};
      if (c.first_failure) cj["first_failure"] = failure_json(c.first_failure);
      if (!c.note.empty()) cj["note"] = c.note;
      cases.push_back(cj);
    }
    j["cases"] = cases;
  }
  if (!deterministic) j["wall_time_s"] = r.wall_time_s;
  return j.dump();
}

void write_csv(std::ostream& os, const std::vector<Report>& reports) {
  os << "check_id,status,prec,first_failure_exponent\n";
  for (const auto& r : reports) {
    os << r.check_id << ',' << to_string(r.status) << ',' << r.prec << ',';
    if (r.first_failure) os << r.first_failure->exponent;
    os << '\n';
  }
}

}  // namespace qcong
