#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qcong/checks.hpp"

namespace qcong {

namespace {

const std::vector<std::int64_t> kLemmaElls = {3, 5, 7, 9, 13};

std::vector<CheckInfo> build_registry() {
  std::vector<CheckInfo> v;
  auto add = [&](std::string id, std::string suite, std::string summary, std::int64_t prec, std::int64_t n_max,
                 std::function<Report(std::int64_t, std::int64_t)> fn) {
    v.push_back({std::move(id), std::move(suite), std::move(summary), prec, n_max, std::move(fn)});
  };
  add("oracle_equivalence", "acceptance", "counts by enumeration vs series coefficients", 26, 25,
      [](auto, auto n) { return check_oracle_equivalence(n); });
  add("dual_construction", "acceptance", "U, V from the definition vs the Lambert form over Z", 1000, 999,
      [](auto p, auto) { return check_dual_construction(p); });
  add("theorem1", "acceptance", "the ten progressions for u and v", 2001, 2000,
      [](auto, auto n) { return check_theorem1(n); });
  for (auto c : {Theorem2Case::U3, Theorem2Case::V3, Theorem2Case::U5, Theorem2Case::V5, Theorem2Case::U7,
                 Theorem2Case::V7, Theorem2Case::U13, Theorem2Case::V13}) {
    add("theorem2_" + to_string(c), "acceptance", "ell-dissection display for " + to_string(c),
        modulus_of(c) == 13 ? 1500 : 800, 0, [c](auto p, auto) { return check_theorem2(c, p); });
  }
  add("lemma_main", "acceptance", "S(b) mod ell via T-series and theta quotients", 300, 0,
      [](auto p, auto) { return check_lemma(LemmaKind::Main, kLemmaElls, p); });
  add("lemma_second", "acceptance", "S(ell-1-b) mod ell via T-series and theta quotients", 300, 0,
      [](auto p, auto) { return check_lemma(LemmaKind::Second, kLemmaElls, p); });
  add("ecubed_dissection", "acceptance", "E(1)^3 mod ell as a sum of theta products", 500, 0,
      [](auto p, auto) { return check_ecubed_dissection({3, 5, 7, 9, 11, 13}, p); });
  add("eta_dissections", "acceptance", "5- and 7-dissections of E(1), E(1)^4 mod 7, E(1)^10 mod 13", 2000, 0,
      [](auto p, auto) { return check_eta_dissections(p); });
  add("product_rules", "acceptance", "theta-product relations for ell = 5, 7, 13", 5000, 0,
      [](auto p, auto) { return check_product_rules(p); });
  add("bailey_uv", "acceptance", "the u and v Bailey pairs", 150, 12,
      [](auto p, auto n) { return check_bailey_uv(n, p); });
  add("finite_jtp", "acceptance", "finite triple product, both sum forms", 200, 10,
      [](auto p, auto n) { return check_finite_jtp(n, p); });
  add("beta_second_derivatives", "acceptance", "second x-derivatives of the finite pair at 1 and 1/q", 120, 8,
      [](auto p, auto n) { return check_beta_second_derivatives(n, p); });
  add("lambert_functional_eq", "acceptance", "T(a,b,c) = q^{c-a-b} T(c-a,c-b,c) on 30 points", 200, 0,
      [](auto p, auto) { return check_lambert_functional_eq(30, p); });
  add("chan_identity", "acceptance", "theta quotient as two T-series on 20 points", 200, 0,
      [](auto p, auto) { return check_chan_identity(20, p); });
  add("pole_split", "acceptance", "1/(1-q^n)^2 mod ell as simple poles", 200, 20,
      [](auto p, auto n) { return check_pole_split({3, 5, 7, 9, 13}, n, p); });
  add("s_to_uv_assembly", "acceptance", "U and V mod ell from the S-series", 200, 0,
      [](auto p, auto) { return check_s_to_uv({3, 5, 7, 13}, p); });
  add("lemma_pipeline", "acceptance", "lemma right-hand sides assembled into U, V vs the displays", 400, 0,
      [](auto p, auto) { return check_lemma_pipeline({5, 7, 13}, p); });
  add("table_integrity", "acceptance", "structure and round trip of the mod 13 term tables", 0, 0,
      [](auto, auto) { return check_table_integrity(); });
  add("conjectures", "explore", "suspected congruences mod 9, 27 and two product forms", 2000, 1800,
      [](auto p, auto n) { return report_conjectures(n, p); });
  return v;
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> r = build_registry();
  return r;
}

const CheckInfo* find_check(const std::string& id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> suite_ids(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& c : registry()) {
    if (c.suite == suite) out.push_back(c.id);
  }
  return out;
}

void validate_registry() {
  for (const auto& c : registry()) {
    if (c.suite != "acceptance" && c.suite != "explore") {
      throw std::logic_error("check '" + c.id + "' is not in any suite");
    }
  }
}

std::vector<Report> run_checks(const std::vector<std::string>& ids, const CheckParams& params, int jobs) {
  std::vector<const CheckInfo*> todo;
  for (const auto& id : ids) {
    const CheckInfo* c = find_check(id);
    if (!c) throw std::invalid_argument("unknown check id: " + id);
    todo.push_back(c);
  }
  std::vector<Report> out(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
      const CheckInfo& c = *todo[i];
      Stopwatch sw;
      try {
        out[i] = c.run(params.prec.value_or(c.default_prec), params.n_max.value_or(c.default_n_max));
      } catch (const TableParseError&) {
        errors[i] = std::current_exception();
      } catch (const std::exception& e) {
        Report r;
        r.check_id = c.id;
        r.prec = params.prec.value_or(c.default_prec);
        CaseResult cr{"check raised an error"};
        cr.status = Status::Fail;
        cr.first_failure = FirstFailure{0, "error", e.what()};
        cr.note = e.what();
        r.add(cr);
        r.finalize();
        out[i] = std::move(r);
      }
      out[i].check_id = c.id;
      if (c.suite == "explore") out[i].informational = true;
      out[i].wall_time_s = sw.seconds();
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), todo.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qcong
