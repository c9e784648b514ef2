#ifndef AFER_LINEAR_CODES_HPP
#define AFER_LINEAR_CODES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "afer/bounds_core.hpp"

namespace afer {

struct WeightDistribution {
  std::vector<Int> counts;  // A_0 .. A_n

  Int min_distance() const;        // smallest i >= 1 with A_i > 0
  Int error_coefficient() const;   // A_d
  void check_invariants(Int k, Int q) const;  // A_0=1, sum=q^k, (q-1)|A_i
};

// Row-generator view of a linear code. Rows are kept linearly
// independent; the constructor rejects rank-deficient input.
class GenMatrix {
 public:
  GenMatrix(Int q, Int k, Int n, std::vector<std::vector<uint8_t>> rows);

  Int q() const { return q_; }
  Int k() const { return k_; }
  Int n() const { return n_; }
  const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }

  std::vector<uint8_t> codeword(Int message_index) const;
  bool contains(const std::vector<uint8_t>& word) const;

  static GenMatrix read(std::istream& in);
  static GenMatrix read_file(const std::string& path);
  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;

 private:
  Int q_, k_, n_;
  std::vector<std::vector<uint8_t>> rows_;
};

inline constexpr Int kDefaultEnumerationCap = Int(1) << 26;

WeightDistribution weight_distribution(const GenMatrix& g,
                                       Int cap = kDefaultEnumerationCap);

struct SupportInfo {
  std::vector<Int> support;  // coordinates where some row is nonzero
  Int effective_length = 0;
};
SupportInfo support_and_effective_length(const GenMatrix& g);

// Drop the non-support coordinates.
GenMatrix restrict_to_support(const GenMatrix& g);

// Matrix utilities over GF(q).
Int matrix_rank(Int q, std::vector<std::vector<uint8_t>> rows);
std::vector<std::vector<uint8_t>> row_reduce(Int q, std::vector<std::vector<uint8_t>> rows);

// Delete the coordinates in `a`.
GenMatrix puncture(const GenMatrix& g, const std::vector<Int>& a);

// Keep the codewords vanishing on `a`, then delete those coordinates.
GenMatrix shorten(const GenMatrix& g, const std::vector<Int>& a);

// Puncture on the support of codeword c and reduce to a basis.
GenMatrix residual(const GenMatrix& g, const std::vector<uint8_t>& c);

// Append the binary parity coordinate.
GenMatrix extend(const GenMatrix& g);

// Concatenate coordinates of codes sharing one message space.
GenMatrix juxtapose(const std::vector<GenMatrix>& parts);

// Weights of the coset {c + v : c in the code spanned by g}.
WeightDistribution coset_weights(const GenMatrix& g, const std::vector<uint8_t>& v);

struct ExtendabilityReport {
  bool nonextendable = false;
  // Extension column raising d, present iff extendable.
  std::optional<std::vector<uint8_t>> witness;
};

// Binary, even d: non-extendable iff every minimum-weight codeword has a
// residual of minimum distance exactly d/2. Cross-validated against the
// exhaustive search over the 2^k candidate columns.
ExtendabilityReport check_nonextendable_even(const GenMatrix& g);

struct SubcodeChain {
  bool griesmer_at_each_level = false;
  std::vector<std::vector<uint8_t>> generators;  // c_1 .. c_m
  std::vector<Int> effective_lengths;            // n(<c_1..c_j>)
};

// Greedy nested-subcode search minimizing effective length per level,
// run up to min(gamma, k-1) levels.
SubcodeChain find_griesmer_subcode_chain(const GenMatrix& g);

// Minimum error coefficient over all distance-optimal [n,2]_q codes,
// by enumerating all rank-2 point multisets of PG(1,q).
Int exhaustive_two_dim_oracle(Int n, Int q);

// A_{d/q} of the residual under c is at most the minimum of A_d over a
// supplementary subcode and its proper cosets.
bool residual_coset_cap_check(const GenMatrix& g, const std::vector<uint8_t>& c);

}  // namespace afer

#endif
