#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcong/assembly.hpp"
#include "qcong/report.hpp"
#include "qcong/tables.hpp"

namespace qcong {

// ---- partition-function checks
Report check_oracle_equivalence(std::int64_t n_max, std::int64_t brute_max = 12);
Report check_dual_construction(std::int64_t prec);
Report check_theorem1(std::int64_t n_max);
/// Informational: the suspected mod 9 / mod 27 congruences and two product forms.
Report report_conjectures(std::int64_t n_max, std::int64_t prec);

// ---- Bailey pairs
Report check_bailey_uv(std::int64_t n_max, std::int64_t prec);
Report check_finite_jtp(std::int64_t n_max, std::int64_t prec, std::int64_t t_lo = -3, std::int64_t t_hi = 3);
Report check_beta_second_derivatives(std::int64_t n_max, std::int64_t prec);

// ---- Lambert-series identities
Report check_lambert_functional_eq(int points, std::int64_t prec);
Report check_chan_identity(int points, std::int64_t prec);
Report check_pole_split(const std::vector<std::int64_t>& ells, std::int64_t n_max, std::int64_t prec);
Report check_s_to_uv(const std::vector<std::int64_t>& ells, std::int64_t prec);

enum class LemmaKind { Main, Second };

/// m must satisfy 1 <= m < ell and 2m != 2b+1 mod ell.
bool lemma_m_valid(std::int64_t ell, std::int64_t b, std::int64_t m);

/// Right-hand side of the S-series lemmas as a term list (evaluate mod ell).
/// Main gives S(b), Second gives S(ell-1-b).
std::vector<RhsTerm> lemma_rhs(LemmaKind kind, std::int64_t ell, std::int64_t b, std::int64_t m);

CaseResult lemma_case(LemmaKind kind, std::int64_t ell, std::int64_t b, std::int64_t m, std::int64_t prec);
Report check_lemma(LemmaKind kind, const std::vector<std::int64_t>& ells, std::int64_t prec);
Report check_lemma_pipeline(const std::vector<std::int64_t>& ells, std::int64_t prec);

/// The k-sum for E(1)^3 mod ell as product terms.
std::vector<RhsTerm> ecubed_rhs(std::int64_t ell);
Report check_ecubed_dissection(const std::vector<std::int64_t>& ells, std::int64_t prec);

// ---- product identities
Report check_eta_dissections(std::int64_t prec);
Report check_product_rules(std::int64_t prec);

// ---- main congruence theorem
enum class Theorem2Case { U3, V3, U5, V5, U7, V7, U13, V13 };

std::string to_string(Theorem2Case c);
std::int64_t modulus_of(Theorem2Case c);
bool is_u(Theorem2Case c);

/// Product and Lambert terms of the display (for ell = 13 without the table part).
std::vector<RhsTerm> theorem2_terms(Theorem2Case c);
/// Full right-hand side mod ell, table part included for ell = 13.
ModSeries theorem2_rhs(Theorem2Case c, std::int64_t prec);
Report check_theorem2(Theorem2Case c, std::int64_t prec);
Report check_table_integrity();

// ---- registry and runner
struct CheckParams {
  std::optional<std::int64_t> prec;
  std::optional<std::int64_t> n_max;
};

struct CheckInfo {
  std::string id;
  std::string suite;  // "acceptance" or "explore"
  std::string summary;
  std::int64_t default_prec;
  std::int64_t default_n_max;
  std::function<Report(std::int64_t prec, std::int64_t n_max)> run;
};

const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(const std::string& id);
std::vector<std::string> suite_ids(const std::string& suite);
/// Throws std::logic_error when a registered check belongs to no known suite.
void validate_registry();

/// Runs checks on up to `jobs` threads; reports come back in the order of `ids`.
/// Unknown ids throw std::invalid_argument before anything runs.
/// A TableParseError from any check is rethrown after all workers finish.
std::vector<Report> run_checks(const std::vector<std::string>& ids, const CheckParams& params, int jobs);

}  // namespace qcong
