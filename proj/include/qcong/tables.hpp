#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/product_expr.hpp"

namespace qcong {

struct TableParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One monomial coeff * q^qpow * prod_a P(a)^exps[a-1] inside a component.
struct TableRow {
  int component;
  int coeff;
  std::int64_t qpow;
  std::array<int, 6> exps;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Term lists for the mod 13 dissections. Component i is scaled by q^i E(169)^4 / E(13).
struct DissectionTable {
  std::string name;
  int modulus = 13;
  std::vector<TableRow> rows;

  static DissectionTable parse(std::istream& in, const std::string& name);
  static DissectionTable load(const std::filesystem::path& file, const std::string& name);
  std::string serialize() const;

  std::vector<const TableRow*> component(int i) const;

  /// The row with q^i folded into the prefactor; P(a) built with ell = 13.
  ProductExpr row_expr(const TableRow& row) const;

  friend bool operator==(const DissectionTable& a, const DissectionTable& b) {
    return a.name == b.name && a.modulus == b.modulus && a.rows == b.rows;
  }
};

/// QCONG_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path data_dir();

/// A13(q) or B13(q) modulo 13 on [.., prec).
ModSeries eval_table(const DissectionTable& t, std::int64_t prec);

}  // namespace qcong
