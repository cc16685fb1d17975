#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "qcong/checks.hpp"
#include "qcong/partitions.hpp"

using namespace qcong;

TEST_CASE("lemma instances") {
  CHECK(lemma_case(LemmaKind::Main, 3, 0, 1, 150).status == Status::Pass);
  CHECK(lemma_case(LemmaKind::Main, 13, 5, 1, 150).status == Status::Pass);
  CHECK(lemma_case(LemmaKind::Main, 9, 2, 1, 150).status == Status::Pass);
  CHECK(lemma_case(LemmaKind::Second, 7, 4, 2, 150).status == Status::Pass);

  CHECK_FALSE(lemma_m_valid(5, 0, 3));  // 2*3 = 1 mod 5
  CHECK(lemma_m_valid(5, 0, 1));
  CHECK_THROWS_AS(lemma_rhs(LemmaKind::Main, 5, 0, 3), std::invalid_argument);
}

TEST_CASE("a perturbed lemma right-hand side is caught") {
  const Ring r = Ring::mod(7);
  auto terms = lemma_rhs(LemmaKind::Main, 7, 2, 1);
  REQUIRE(terms.size() > 2);
  terms[1].prod.coeff += 1;
  auto lhs = s_series<Residue>(r, 7, 2, 200, -49);
  auto rhs = eval_terms<Residue>(r, terms, 200);
  CHECK(compare_series("perturbed", lhs, rhs).status == Status::Fail);
}

TEST_CASE("a perturbed theorem display is caught") {
  const Ring r = Ring::mod(5);
  auto [U, V] = uv_series_def<Residue>(r, 300);
  auto terms = theorem2_terms(Theorem2Case::U5);
  CHECK(compare_series("ok", eval_terms<Residue>(r, terms, 300), U).status == Status::Pass);
  terms.back().prod.qpow += 1;
  CHECK(compare_series("shifted", eval_terms<Residue>(r, terms, 300), U).status == Status::Fail);
}

TEST_CASE("E(1)^3 k-sum sign convention") {
  const Ring r = Ring::mod(5);
  ProductExpr cube;
  cube.E(1, 3);
  auto lhs = eval_product_expr<Residue>(r, cube, 200);
  auto terms = ecubed_rhs(5);
  CHECK(compare_series("k-sum", lhs, eval_terms<Residue>(r, terms, 200)).status == Status::Pass);
  for (auto& t : terms) t.prod.coeff = -t.prod.coeff;
  CHECK(compare_series("flipped", lhs, eval_terms<Residue>(r, terms, 200)).status == Status::Fail);
}

TEST_CASE("small runs of each check family") {
  CHECK(check_theorem1(200).status == Status::Pass);
  CHECK(check_theorem2(Theorem2Case::V13, 800).status == Status::Pass);
  CHECK(check_bailey_uv(4, 60).status == Status::Pass);
  CHECK(check_beta_second_derivatives(3, 40).status == Status::Pass);
  CHECK(check_pole_split({13}, 7, 120).status == Status::Pass);

  auto conj = report_conjectures(200, 300);
  CHECK(conj.informational);
  CHECK(conj.cases.size() >= 6);
}

TEST_CASE("theorem 2 component vanishing") {
  auto r = check_theorem2(Theorem2Case::U5, 400);
  CHECK(r.status == Status::Pass);
  int vanishing = 0;
  for (const auto& c : r.cases) vanishing += c.label.find("no q^n") != std::string::npos;
  CHECK(vanishing == 2);
}

TEST_CASE("registry") {
  validate_registry();
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK((c.suite == "acceptance" || c.suite == "explore"));
  }
  CHECK(ids.size() == suite_ids("acceptance").size() + suite_ids("explore").size());
  CHECK(suite_ids("explore") == std::vector<std::string>{"conjectures"});
  CHECK(find_check("theorem2_U13") != nullptr);
  CHECK(find_check("nope") == nullptr);
  CHECK_THROWS_AS(run_checks({"pole_split", "nope"}, {}, 1), std::invalid_argument);
}

TEST_CASE("runner is deterministic and keeps order") {
  CheckParams p;
  p.prec = 120;
  p.n_max = 6;
  const std::vector<std::string> ids = {"bailey_uv", "pole_split", "chan_identity", "lambert_functional_eq"};
  auto a = run_checks(ids, p, 1);
  auto b = run_checks(ids, p, 4);
  REQUIRE(a.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(a[i].check_id == ids[i]);
    CHECK(to_json(a[i], true) == to_json(b[i], true));
  }
}

TEST_CASE("a malformed data file surfaces as TableParseError") {
  auto dir = std::filesystem::temp_directory_path() / "qcong_bad_tables";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "a13.terms") << "1 1 0 0 0\n";
  std::ofstream(dir / "b13.terms") << "1 1 0 0 0 0 0 0 0\n";
  setenv("QCONG_DATA_DIR", dir.c_str(), 1);
  CHECK_THROWS_AS(run_checks({"table_integrity"}, {}, 2), TableParseError);
  unsetenv("QCONG_DATA_DIR");
  std::filesystem::remove_all(dir);
}
