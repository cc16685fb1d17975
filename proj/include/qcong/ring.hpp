#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qcong {

/// Arbitrary-precision integer coefficient.
using Integer = mpz_class;

/// Canonical representative of a residue class, always in [0, m).
using Residue = std::int64_t;

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WindowError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Coefficient ring of a series: the integers, or Z/m for 2 <= m < 2^31.
class Ring {
 public:
  static Ring integers() { return Ring(0); }
  static Ring mod(std::int64_t m);

  bool is_integers() const { return modulus_ == 0; }
  /// 0 for the integers.
  std::int64_t modulus() const { return modulus_; }
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(std::int64_t m) : modulus_(m) {}
  std::int64_t modulus_;
};

/// Canonical residue of x mod m (mathematical mod, result in [0, m)).
inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t x, std::int64_t m) {
  return (x - floor_mod(x, m)) / m;
}

inline std::int64_t ceil_div(std::int64_t x, std::int64_t m) {
  return -floor_div(-x, m);
}

/// Inverse of a modulo m; throws NotInvertible when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Per-scalar ring arithmetic. The ring argument carries the modulus for Residue.
template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<Integer> {
  static void check(const Ring& r) {
    if (!r.is_integers()) throw RingMismatch("Integer coefficients require the ring ZZ");
  }
  static Integer zero(const Ring&) { return Integer(0); }
  static Integer from(const Ring&, long v) { return Integer(v); }
  static Integer from(const Ring&, const Integer& v) { return v; }
  static Integer to_integer(const Ring&, const Integer& v) { return v; }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static bool is_unit(const Ring&, const Integer& a) { return a == 1 || a == -1; }
  static Integer inverse(const Ring&, const Integer& a) {
    if (a == 1 || a == -1) return a;
    throw NotInvertible("integer " + a.get_str() + " is not a unit");
  }
  static Integer add(const Ring&, const Integer& a, const Integer& b) { return a + b; }
  static Integer sub(const Ring&, const Integer& a, const Integer& b) { return a - b; }
  static Integer neg(const Ring&, const Integer& a) { return -a; }
  static Integer mul(const Ring&, const Integer& a, const Integer& b) { return a * b; }
  static void add_to(const Ring&, Integer& acc, const Integer& x) { acc += x; }
  static void sub_from(const Ring&, Integer& acc, const Integer& x) { acc -= x; }
};

template <>
struct ScalarOps<Residue> {
  static void check(const Ring& r) {
    if (r.is_integers()) throw RingMismatch("Residue coefficients require a ring Z/m");
  }
  static Residue zero(const Ring&) { return 0; }
  static Residue from(const Ring& r, long v) { return floor_mod(v, r.modulus()); }
  static Residue from(const Ring& r, const Integer& v) {
    Integer m(static_cast<long>(r.modulus()));
    Integer t;
    mpz_fdiv_r(t.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return t.get_si();
  }
  static Integer to_integer(const Ring&, const Residue& v) { return Integer(static_cast<long>(v)); }
  static bool is_zero(Residue a) { return a == 0; }
  static bool is_unit(const Ring& r, Residue a);
  static Residue inverse(const Ring& r, Residue a) { return inverse_mod(a, r.modulus()); }
  static Residue add(const Ring& r, Residue a, Residue b) {
    Residue s = a + b;
    return s >= r.modulus() ? s - r.modulus() : s;
  }
  static Residue sub(const Ring& r, Residue a, Residue b) {
    Residue s = a - b;
    return s < 0 ? s + r.modulus() : s;
  }
  static Residue neg(const Ring& r, Residue a) { return a == 0 ? 0 : r.modulus() - a; }
  static Residue mul(const Ring& r, Residue a, Residue b) { return (a * b) % r.modulus(); }
  static void add_to(const Ring& r, Residue& acc, Residue x) { acc = add(r, acc, x); }
  static void sub_from(const Ring& r, Residue& acc, Residue x) { acc = sub(r, acc, x); }
};

}  // namespace qcong
