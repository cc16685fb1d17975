// Command-line front end: sequences, single checks, the acceptance suite, exploration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qcong/checks.hpp"
#include "qcong/partitions.hpp"

using namespace qcong;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitData = 3;

struct Options {
  std::optional<std::int64_t> prec, n_max, modulus;
  std::vector<std::string> checks;
  std::string out, csv, seq = "u";
  int jobs = 1;
  bool deterministic = false;
};

std::vector<Integer> sequence_values(const std::string& seq, std::int64_t n_max, bool brute) {
  std::vector<Integer> v;
  if (seq == "p") {
    if (brute) {
      for (int n = 0; n <= n_max; ++n) v.emplace_back(static_cast<unsigned long>(partitions_of(n).size()));
    } else {
      v = p_table(static_cast<int>(n_max));
    }
    return v;
  }
  const Variant var = seq == "u" ? Variant::U : Variant::V;
  if (brute) {
    for (int n = 0; n <= n_max; ++n) v.push_back(quadruple_count_brute(var, n));
    return v;
  }
  auto [U, V] = uv_series_def<Integer>(Ring::integers(), n_max + 1);
  const auto& s = var == Variant::U ? U : V;
  for (std::int64_t n = 0; n <= n_max; ++n) v.push_back(s.coeff(n));
  return v;
}

int print_sequence(const Options& o, bool brute) {
  const std::int64_t n_max = o.n_max.value_or(20);
  auto v = sequence_values(o.seq, n_max, brute);
  if (o.modulus) {
    for (auto& x : v) {
      x %= Integer(static_cast<long>(*o.modulus));
      if (x < 0) x += *o.modulus;
    }
  }
  std::string line;
  for (std::size_t i = 0; i < v.size(); ++i) line += (i ? "," : "") + v[i].get_str();
  std::cout << line << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    SequenceTable{o.seq, v, brute ? Origin::Enumerated : Origin::SeriesDef}.write(f);
  }
  return kExitPass;
}

int run_and_emit(const Options& o, const std::vector<std::string>& ids, bool gating) {
  CheckParams params{o.prec, o.n_max};
  auto reports = run_checks(ids, params, o.jobs);
  std::ofstream file;
  if (!o.out.empty()) file.open(o.out);
  std::ostream& os = o.out.empty() ? std::cout : file;
  bool ok = true;
  for (const auto& r : reports) {
    os << to_json(r, o.deterministic) << "\n";
    std::cerr << to_string(r.status) << "  " << r.check_id;
    if (!o.deterministic) std::cerr << "  (" << r.wall_time_s << " s)";
    if (r.first_failure) std::cerr << "  first failure in '" << r.first_failure_case << "' at q^" << r.first_failure->exponent;
    std::cerr << "\n";
    if (!r.informational && r.status != Status::Pass) ok = false;
  }
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    write_csv(f, reports);
  }
  return (!gating || ok) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    validate_registry();
  } catch (const std::logic_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"q-series partition congruence verifier"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--prec", o.prec, "series precision")->check(CLI::PositiveNumber);
    sc->add_option("--n-max", o.n_max, "largest argument")->check(CLI::NonNegativeNumber);
    sc->add_option("--out", o.out, "output file");
  };
  auto checks_opts = [&](CLI::App* sc) {
    common(sc);
    sc->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sc->add_option("--csv", o.csv, "CSV summary file");
    sc->add_flag("--deterministic", o.deterministic, "omit timings");
  };
  auto seq_opts = [&](CLI::App* sc) {
    common(sc);
    sc->add_option("--seq", o.seq, "sequence")->check(CLI::IsMember({"u", "v", "p"}));
    sc->add_option("--mod", o.modulus, "reduce values mod m")->check(CLI::PositiveNumber);
  };

  auto* coeffs = app.add_subcommand("coeffs", "coefficients from the generating functions");
  seq_opts(coeffs);
  auto* enumerate = app.add_subcommand("enumerate", "counts by brute-force enumeration");
  seq_opts(enumerate);
  auto* verify = app.add_subcommand("verify", "run named checks");
  checks_opts(verify);
  verify->add_option("--check", o.checks, "check id (repeatable)")->required();
  auto* suite = app.add_subcommand("suite", "run every acceptance check");
  checks_opts(suite);
  auto* explore = app.add_subcommand("explore", "informational exploration");
  checks_opts(explore);
  auto* list = app.add_subcommand("list", "list registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*coeffs) return print_sequence(o, false);
    if (*enumerate) return print_sequence(o, true);
    if (*list) {
      for (const auto& c : registry()) std::cout << c.id << "\t" << c.suite << "\t" << c.summary << "\n";
      return kExitPass;
    }
    if (*verify) {
      for (const auto& id : o.checks) {
        if (!find_check(id)) {
          std::cerr << "unknown check id: " << id << "\n";
          return kExitUsage;
        }
      }
      return run_and_emit(o, o.checks, true);
    }
    if (*suite) return run_and_emit(o, suite_ids("acceptance"), true);
    if (*explore) return run_and_emit(o, suite_ids("explore"), false);
  } catch (const TableParseError& e) {
    std::cerr << "data file error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
