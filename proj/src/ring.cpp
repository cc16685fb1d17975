#include "qcong/ring.hpp"

#include <numeric>

namespace qcong {

Ring Ring::mod(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
  if (m >= (std::int64_t{1} << 31)) throw std::invalid_argument("modulus must be < 2^31");
  return Ring(m);
}

std::string Ring::name() const {
  return is_integers() ? std::string("ZZ") : "Z/" + std::to_string(modulus_);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = floor_mod(a, m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  return floor_mod(s0, m);
}

bool ScalarOps<Residue>::is_unit(const Ring& r, Residue a) {
  return std::gcd(a, r.modulus()) == 1;
}

}  // namespace qcong
