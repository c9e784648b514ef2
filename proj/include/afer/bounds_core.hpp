#ifndef AFER_BOUNDS_CORE_HPP
#define AFER_BOUNDS_CORE_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace afer {

using Int = long long;

struct CodeParams {
  Int n = 0;
  Int k = 0;
  Int d = 0;
  Int q = 0;
  std::optional<Int> e;

  void validate() const;  // throws std::invalid_argument on a bad field
};

// d = s*2^(k-1) - sum lambda_i 2^i with (s-1)*2^(k-1) < d <= s*2^(k-1)
struct AdicExpansion {
  Int s = 0;
  std::vector<int> lambda;  // lambda_0 .. lambda_{k-2}

  Int reconstruct(Int k) const;
};

struct TwoDimAnswer {
  Int s = 0;
  Int t = 0;  // in [0, q]; t == q means (q+1) | n (replicated Simplex)
  Int d = 0;
  Int e = 0;
};

Int ceil_div(Int a, Int b);

// Smallest multiple of q-1 that is >= x (and >= q-1 when x > 0).
Int ceil_to_multiple(Int x, Int q);

// v_k = (q^k - 1)/(q - 1)
Int projective_point_count(Int k, Int q);

Int ipow(Int base, Int exp);

Int griesmer_length(Int k, Int d, Int q);

// sum_{i<k-1} ceil(d/q^i) + ceil(m/q^(k-1)), m the maximum weight
Int modified_griesmer_length(Int k, Int d, Int m, Int q);

// Largest d with griesmer_length(k, d, q) <= n.
Int griesmer_max_distance(Int n, Int k, Int q);

// Number of i in [0, k) with q^i | d. Equals
// griesmer_length(k, d+1, q) - griesmer_length(k, d, q).
Int griesmer_length_step(Int k, Int d, Int q);

// Smallest k1 in [1, k-1] with n - g_q(k1,d) >= g_q(k-k1, ceil(d/q^k1)+1);
// k when n = g_q(k,d). When neither case applies the fallback k is
// returned with fallback=true (the defining inequality has no witness).
struct GammaResult {
  Int value = 0;
  bool fallback = false;
};
GammaResult gamma(Int n, Int k, Int d, Int q);

AdicExpansion adic_anti_expansion(Int d, Int k);

TwoDimAnswer two_dim_optimal(Int n, Int q);

// A_d * Q(sqrt(2*d*k*ebn0/n)); log-domain tail for large arguments.
double afer_estimate(const CodeParams& params, double ebn0);

// Gaussian tail Q(x), accurate in the far tail.
double gaussian_tail(double x);

}  // namespace afer

#endif
