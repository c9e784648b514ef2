#include "afer/bounds_core.hpp"

#include <cmath>
#include <stdexcept>

#include "afer/gf.hpp"

namespace afer {

void CodeParams::validate() const {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
  if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power >= 2");
  if (e) {
    // e = 0 is admitted for hypothetical estimates; a real code has e >= q-1
    if (*e < 0 || (*e > 0 && *e < q - 1))
      throw std::invalid_argument("e must be 0 or at least q-1");
    if (*e % (q - 1) != 0) throw std::invalid_argument("q-1 must divide e");
  }
}

Int ceil_div(Int a, Int b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: non-positive divisor");
  return (a + b - 1) / b;
}

Int ceil_to_multiple(Int x, Int q) {
  if (x <= 0) return 0;
  Int m = q - 1;
  return ceil_div(x, m) * m;
}

Int ipow(Int base, Int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  Int r = 1;
  while (exp-- > 0) {
    if (r > (1LL << 62) / base) throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

Int projective_point_count(Int k, Int q) {
  return (ipow(q, k) - 1) / (q - 1);
}

Int griesmer_length(Int k, Int d, Int q) {
  if (k < 1) throw std::invalid_argument("griesmer_length: k >= 1 required");
  if (d < 1) throw std::invalid_argument("griesmer_length: d >= 1 required");
  if (!is_prime_power(q)) throw std::invalid_argument("griesmer_length: q must be a prime power");
  Int sum = 0, p = 1;
  for (Int i = 0; i < k; ++i) {
    sum += ceil_div(d, p);
    if (p <= d) p *= q;  // larger powers all contribute ceil = 1
  }
  return sum;
}

Int modified_griesmer_length(Int k, Int d, Int m, Int q) {
  if (k < 2) throw std::invalid_argument("modified_griesmer_length: k >= 2 required");
  if (m < d) throw std::invalid_argument("modified_griesmer_length: m >= d required");
  Int sum = 0, p = 1;
  for (Int i = 0; i + 1 < k; ++i) {
    sum += ceil_div(d, p);
    if (p <= d + m) p *= q;
  }
  return sum + ceil_div(m, p);
}

Int griesmer_max_distance(Int n, Int k, Int q) {
  if (n < k) throw std::invalid_argument("griesmer_max_distance: n >= k required");
  // g is increasing in d and g(k,1) = k, so binary search on d.
  Int lo = 1, hi = n;  // g(k,d) >= d, so d <= n
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (griesmer_length(k, mid, q) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

Int griesmer_length_step(Int k, Int d, Int q) {
  Int count = 0, p = 1;
  for (Int i = 0; i < k; ++i) {
    if (d % p == 0) ++count;
    if (p > d) break;
    p *= q;
  }
  return count;
}

GammaResult gamma(Int n, Int k, Int d, Int q) {
  Int g = griesmer_length(k, d, q);
  if (n < g || n >= griesmer_length(k, d + 1, q))
    throw std::invalid_argument("gamma: (n,k,d) is not Griesmer-optimal");
  if (n == g) return {k, false};
  for (Int k1 = 1; k1 < k; ++k1) {
    Int dr = ceil_div(d, ipow(q, k1)) + 1;
    if (n - griesmer_length(k1, d, q) >= griesmer_length(k - k1, dr, q))
      return {k1, false};
  }
  return {k, true};
}

Int AdicExpansion::reconstruct(Int k) const {
  Int v = s * ipow(2, k - 1);
  for (size_t i = 0; i < lambda.size(); ++i) v -= lambda[i] * ipow(2, (Int)i);
  return v;
}

AdicExpansion adic_anti_expansion(Int d, Int k) {
  if (k < 2) throw std::invalid_argument("adic_anti_expansion: k >= 2 required");
  if (d < 1) throw std::invalid_argument("adic_anti_expansion: d >= 1 required");
  Int half = ipow(2, k - 1);
  AdicExpansion out;
  out.s = ceil_div(d, half);
  Int deficit = out.s * half - d;  // in [0, 2^(k-1))
  out.lambda.resize(k - 1);
  for (Int i = 0; i < k - 1; ++i) out.lambda[i] = (deficit >> i) & 1;
  return out;
}

TwoDimAnswer two_dim_optimal(Int n, Int q) {
  if (n < 2) throw std::invalid_argument("two_dim_optimal: n >= 2 required");
  if (!is_prime_power(q)) throw std::invalid_argument("two_dim_optimal: q must be a prime power");
  Int t = (n - 1) % (q + 1);
  Int s = (n - 1) / (q + 1);
  if (t <= q - 1) return {s, t, s * q + t, (q - 1) * (t + 1)};
  // t == q: n is a multiple of q+1, a replicated [q+1, 2, q] Simplex
  Int r = n / (q + 1);
  return {r, q, r * q, q * q - 1};
}

double gaussian_tail(double x) {
  if (x < 30.0) return 0.5 * std::erfc(x / std::sqrt(2.0));
  // erfc underflows; asymptotic series of Q in the log domain
  double inv2 = 1.0 / (x * x);
  double series = 1.0 - inv2 + 3.0 * inv2 * inv2 - 15.0 * inv2 * inv2 * inv2;
  double lg = -0.5 * x * x - std::log(x) - 0.5 * std::log(2.0 * M_PI) + std::log(series);
  return std::exp(lg);
}

double afer_estimate(const CodeParams& params, double ebn0) {
  params.validate();
  if (!params.e) throw std::invalid_argument("afer_estimate: error coefficient required");
  if (ebn0 <= 0) throw std::invalid_argument("afer_estimate: ebn0 must be positive");
  double arg = std::sqrt(2.0 * (double)params.d * (double)params.k * ebn0 / (double)params.n);
  return (double)*params.e * gaussian_tail(arg);
}

}  // namespace afer
