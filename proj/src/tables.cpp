#include "qcong/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qcong {

DissectionTable DissectionTable::parse(std::istream& in, const std::string& name) {
  DissectionTable t;
  t.name = name;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> v;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        v.push_back(x);
      } catch (const std::exception&) {
        throw TableParseError(name + ":" + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      }
    }
    if (v.empty()) continue;
    if (v.size() != 9) {
      throw TableParseError(name + ":" + std::to_string(lineno) + ": expected 9 fields, got " +
                            std::to_string(v.size()));
    }
    if (v[0] < 0 || v[0] > 12) {
      throw TableParseError(name + ":" + std::to_string(lineno) + ": component out of range 0..12");
    }
    if (v[1] < 0 || v[1] > 12) {
      throw TableParseError(name + ":" + std::to_string(lineno) + ": coefficient out of range 0..12");
    }
    TableRow r{static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], {}};
    for (int a = 0; a < 6; ++a) r.exps[a] = static_cast<int>(v[3 + a]);
    t.rows.push_back(r);
  }
  return t;
}

DissectionTable DissectionTable::load(const std::filesystem::path& file, const std::string& name) {
  std::ifstream in(file);
  if (!in) throw TableParseError("cannot open table file " + file.string());
  return parse(in, name);
}

std::string DissectionTable::serialize() const {
  std::ostringstream os;
  os << "# " << name << " mod " << modulus << "\n";
  for (const auto& r : rows) {
    os << r.component << ' ' << r.coeff << ' ' << r.qpow;
    for (int e : r.exps) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

std::vector<const TableRow*> DissectionTable::component(int i) const {
  std::vector<const TableRow*> out;
  for (const auto& r : rows)
    if (r.component == i) out.push_back(&r);
  return out;
}

ProductExpr DissectionTable::row_expr(const TableRow& row) const {
  ProductExpr e;
  e.coeff = row.coeff;
  e.qpow = row.component + row.qpow;
  for (int a = 1; a <= 6; ++a) {
    if (row.exps[a - 1] != 0) e.P(a, 13, row.exps[a - 1]);
  }
  return e;
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("QCONG_DATA_DIR"); env && *env) return env;
  return QCONG_DEFAULT_DATA_DIR;
}

ModSeries eval_table(const DissectionTable& t, std::int64_t prec) {
  Ring r = Ring::mod(t.modulus);
  std::int64_t lowest = prec - 1;
  for (const auto& row : t.rows) lowest = std::min(lowest, row.component + row.qpow);
  ModSeries sum(r, lowest, prec);
  for (const auto& row : t.rows) sum = sum + eval_product_expr<Residue>(r, t.row_expr(row), prec);
  ProductExpr common;
  common.E(169, 4).E(13, -1);
  // common factor is a power series with constant term 1
  return sum * eval_product_expr<Residue>(r, common, prec - lowest);
}

}  // namespace qcong
