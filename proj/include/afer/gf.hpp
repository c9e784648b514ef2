#ifndef AFER_GF_HPP
#define AFER_GF_HPP

#include <cstdint>
#include <vector>

namespace afer {

bool is_prime(long long x);

// Prime powers p^e with e >= 1.
bool is_prime_power(long long q);

// Finite field arithmetic for q in {2,3,4,5,7,8,9}.
//
// Prime fields use modular arithmetic. Extension fields use fixed
// irreducible polynomials: GF(4) = GF(2)[x]/(x^2+x+1),
// GF(8) = GF(2)[x]/(x^3+x+1), GF(9) = GF(3)[x]/(x^2+1).
// Elements are encoded as c0 + c1*p + c2*p^2 in the polynomial basis.
class GF {
 public:
  explicit GF(int q);

  int q() const { return q_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;  // throws on a == 0

  static bool supported(int q);

 private:
  int q_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace afer

#endif
