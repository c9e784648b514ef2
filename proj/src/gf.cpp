#include "afer/gf.hpp"

#include <stdexcept>

namespace afer {

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long p = 2; p * p <= x; ++p)
    if (x % p == 0) return false;
  return true;
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // q itself is prime
}

bool GF::supported(int q) {
  switch (q) {
    case 2: case 3: case 4: case 5: case 7: case 8: case 9:
      return true;
    default:
      return false;
  }
}

namespace {

struct FieldSpec {
  int p;       // characteristic
  int e;       // extension degree
  int reduct;  // x^e reduced modulo the irreducible polynomial, base-p encoded
};

FieldSpec spec_for(int q) {
  switch (q) {
    case 2: return {2, 1, 0};
    case 3: return {3, 1, 0};
    case 5: return {5, 1, 0};
    case 7: return {7, 1, 0};
    case 4: return {2, 2, 0b11};    // x^2 = x + 1
    case 8: return {2, 3, 0b011};   // x^3 = x + 1
    case 9: return {3, 2, 2};       // x^2 = -1 = 2
    default: throw std::invalid_argument("unsupported field size");
  }
}

}  // namespace

GF::GF(int q) : q_(q) {
  if (!supported(q)) throw std::invalid_argument("unsupported field size");
  FieldSpec fs = spec_for(q);

  auto digits = [&](int a) {
    std::vector<int> d(fs.e);
    for (int i = 0; i < fs.e; ++i) { d[i] = a % fs.p; a /= fs.p; }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = fs.e - 1; i >= 0; --i) a = a * fs.p + d[i];
    return a;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(fs.e);
    for (int i = 0; i < fs.e; ++i) dn[i] = (fs.p - da[i]) % fs.p;
    neg_[a] = static_cast<uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> ds(fs.e);
      for (int i = 0; i < fs.e; ++i) ds[i] = (da[i] + db[i]) % fs.p;
      add_[a * q + b] = static_cast<uint8_t>(encode(ds));

      // polynomial product reduced by repeated substitution of x^e
      std::vector<int> prod(2 * fs.e - 1, 0);
      for (int i = 0; i < fs.e; ++i)
        for (int j = 0; j < fs.e; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % fs.p;
      auto dr = digits(fs.reduct);
      for (int deg = 2 * fs.e - 2; deg >= fs.e; --deg) {
        int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < fs.e; ++i)
          prod[deg - fs.e + i] = (prod[deg - fs.e + i] + c * dr[i]) % fs.p;
      }
      std::vector<int> dm(prod.begin(), prod.begin() + fs.e);
      mul_[a * q + b] = static_cast<uint8_t>(encode(dm));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
}

uint8_t GF::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

}  // namespace afer
