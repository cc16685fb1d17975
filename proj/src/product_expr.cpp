#include "qcong/product_expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcong {

ProductExpr operator*(const ProductExpr& x, const ProductExpr& y) {
  ProductExpr r = x;
  r.coeff *= y.coeff;
  r.qpow += y.qpow;
  r.factors.insert(r.factors.end(), y.factors.begin(), y.factors.end());
  return r;
}

FactorAccumulator lower(const ProductExpr& expr, std::int64_t prec) {
  // Shifts first: infinite products must be cut relative to the final window.
  FactorAccumulator acc;
  acc.times_monomial(1, expr.qpow);
  for (const auto& f : expr.factors) {
    if (f.kind == ProductFactor::Kind::Jacobi) {
      JacobiNormal n = normalize_jacobi(f.a, f.M);
      acc.times_monomial(f.e % 2 != 0 ? n.sign : 1, n.shift * f.e);
    } else if (f.kind == ProductFactor::Kind::PochFinite) {
      acc.times_poch_finite(f.a, f.M, f.e);
    }
  }
  const std::int64_t limit = prec - acc.shift();
  for (const auto& f : expr.factors) {
    switch (f.kind) {
      case ProductFactor::Kind::PochInf:
        acc.times_poch_inf(f.a, f.M, f.e, limit);
        break;
      case ProductFactor::Kind::Jacobi: {
        JacobiNormal n = normalize_jacobi(f.a, f.M);
        acc.times_poch_inf(n.r, f.M, f.e, limit);
        acc.times_poch_inf(f.M - n.r, f.M, f.e, limit);
        break;
      }
      case ProductFactor::Kind::PochFinite:
        break;
    }
  }
  return acc;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::int64_t ell) : s_(s), ell_(ell) {}

  std::vector<ProductExpr> sum() {
    std::vector<ProductExpr> out;
    skip();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1 : 1;
    }
    while (true) {
      ProductExpr t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      sign = c == '-' ? -1 : 1;
    }
    return out;
  }

 private:
  ProductExpr term() {
    ProductExpr t;
    int side = 1;
    bool any = false;
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c == '+' || c == '-') break;
      if (c == '*') {
        ++pos_;
        continue;
      }
      if (c == '/') {
        if (side < 0) fail("second '/' in one term");
        ++pos_;
        side = -1;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (side < 0) fail("coefficient in denominator");
        t.coeff *= Integer(number_token());
      } else if (c == 'q') {
        ++pos_;
        std::int64_t k = 1;
        if (maybe('^')) k = signed_int();
        t.qpow += side * k;
      } else if (c == 'E') {
        ++pos_;
        expect('(');
        std::int64_t a = signed_int();
        expect(')');
        t.E(a, side * exponent());
      } else if (c == 'P') {
        ++pos_;
        if (ell_ <= 0) fail("P(a) used without ell");
        expect('(');
        std::int64_t a = signed_int();
        expect(')');
        t.P(a, ell_, side * exponent());
      } else if (c == 'J') {
        ++pos_;
        expect('(');
        std::int64_t a = signed_int();
        expect(',');
        std::int64_t M = signed_int();
        expect(')');
        t.jac(a, M, side * exponent());
      } else if (c == 'F') {
        ++pos_;
        expect('(');
        std::int64_t a = signed_int();
        expect(',');
        std::int64_t n = signed_int();
        expect(')');
        t.poch_finite(a, n, side * exponent());
      } else if (c == '(') {
        ++pos_;
        std::int64_t a = signed_int();
        expect(';');
        std::int64_t M = signed_int();
        expect(')');
        t.poch(a, M, side * exponent());
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      any = true;
    }
    if (!any) fail("empty term");
    return t;
  }

  std::int64_t exponent() {
    skip();
    if (!maybe('^')) return 1;
    return signed_int();
  }

  std::string number_token() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::int64_t signed_int() {
    skip();
    bool neg = false;
    bool braced = maybe('{');
    skip();
    if (maybe('-')) neg = true;
    skip();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::string tok = number_token();
    if (tok.size() > 15) fail("integer too large");
    if (braced) expect('}');
    std::int64_t v = std::stoll(tok);
    return neg ? -v : v;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  bool maybe(char c) {
    skip();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!maybe(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("product expression: " + what + " at offset " +
                                std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::int64_t ell_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ProductExpr> parse_product_sum(std::string_view text, std::int64_t ell) {
  return Parser(text, ell).sum();
}

ProductExpr parse_product(std::string_view text, std::int64_t ell) {
  auto terms = parse_product_sum(text, ell);
  if (terms.size() != 1) throw std::invalid_argument("expected a single product term");
  return terms.front();
}

std::string to_string(const ProductExpr& expr) {
  std::ostringstream os;
  if (sgn(expr.coeff) < 0) os << "-";
  os << Integer(abs(expr.coeff)).get_str();
  if (expr.qpow != 0) os << " q^" << expr.qpow;
  for (const auto& f : expr.factors) {
    switch (f.kind) {
      case ProductFactor::Kind::PochInf:
        if (f.a == f.M) os << " E(" << f.a << ")";
        else os << " (" << f.a << ";" << f.M << ")";
        break;
      case ProductFactor::Kind::Jacobi:
        os << " J(" << f.a << "," << f.M << ")";
        break;
      case ProductFactor::Kind::PochFinite:
        os << " F(" << f.a << "," << f.M << ")";
        break;
    }
    if (f.e != 1) os << "^" << f.e;
  }
  return os.str();
}

}  // namespace qcong
