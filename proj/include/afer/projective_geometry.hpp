#ifndef AFER_PROJECTIVE_GEOMETRY_HPP
#define AFER_PROJECTIVE_GEOMETRY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afer/bounds_core.hpp"
#include "afer/linear_codes.hpp"

namespace afer {

// Nonzero vector of length k over GF(q), normalized so the first
// nonzero coordinate is 1.
struct ProjPoint {
  std::vector<uint8_t> coords;

  bool operator<(const ProjPoint& o) const { return coords < o.coords; }
  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
};

ProjPoint normalize_point(Int q, std::vector<uint8_t> coords);

struct PointMultiset {
  Int k = 0;
  Int q = 0;
  std::map<ProjPoint, Int> mult;

  Int cardinality() const;
  Int max_multiplicity() const;
};

std::vector<ProjPoint> enumerate_points(Int k, Int q);

// Points supported inside the 1-based coordinate set `a`.
PointMultiset subspace_points(const std::vector<Int>& a, Int k, Int q);

// Convenience for the catalogue's interval supports {a, .., b}.
PointMultiset subspace_points_range(Int a, Int b, Int k, Int q);

// P_{I_t}: the first t identity columns.
PointMultiset identity_points(Int t, Int k, Int q);

// P_{T_t}: P_{I_t} together with the all-ones column on the first t coordinates.
PointMultiset t_frame_points(Int t, Int k, Int q);

// P'_{T_4}: P_{I_4} together with (1,0,1,1) and (0,1,1,1).
PointMultiset t4_prime_points(Int k, Int q);

PointMultiset scale(Int s, const PointMultiset& m);
PointMultiset add(const PointMultiset& m1, const PointMultiset& m2);
PointMultiset subtract(const PointMultiset& m1, const PointMultiset& m2);  // throws on underflow

GenMatrix to_generator_matrix(const PointMultiset& m);
PointMultiset from_generator_matrix(const GenMatrix& g);

struct HyperplaneProfile {
  Int min_count = 0;
  Int achieving_min = 0;
  Int max_count = 0;
  Int achieving_max = 0;

  // arc view of a multiset of cardinality n
  Int code_distance(Int n) const { return n - max_count; }
  Int code_error_coefficient(Int q) const { return (q - 1) * achieving_max; }
  // minihyper view
  Int minihyper_m() const { return min_count; }
  Int minihyper_e() const { return achieving_min; }
};

HyperplaneProfile hyperplane_profile(const PointMultiset& m);

// The arc p -> s - m(p); cardinality s*v_k - |m|.
PointMultiset complement_arc(const PointMultiset& m, Int s);

Int multiset_rank(const PointMultiset& m);

struct RankScaling {
  Int k_prime = 0;
  Int e_full = 0;     // minihyper e in the ambient space
  Int e_reduced = 0;  // in the rank-k' frame; e_full = q^(k-k') * e_reduced
};

RankScaling rank_scaling_check(const PointMultiset& m);  // requires rank < k

PointMultiset ss_minihyper(const std::vector<std::vector<Int>>& supports, Int k, Int q);

enum class BelovVariant { BV1, BV2 };

PointMultiset belov_minihyper(const std::vector<std::vector<Int>>& supports,
                              BelovVariant variant, Int k, Int q,
                              std::optional<ProjPoint> extra = std::nullopt);

struct SsTwoSubspace {
  Int value = 0;          // 2^(k-a1-a2) * (2^(a1+a2) + 2^cap - 2^a1 - 2^a2)
  Int minimizer_cap = 0;  // max(0, a1+a2-k)
  Int minimum = 0;        // value at the minimizer
};

SsTwoSubspace ss_two_subspace_error_coefficient(Int k, Int a1, Int a2, Int cap);

struct ClassificationVerdict {
  bool ss_excluded = false;
  std::optional<Int> belov_shape;
};

// lambda from the 2-adic anti-expansion of d, s = ceil(d / 2^(k-1)).
ClassificationVerdict classification_predicates(const std::vector<int>& lambda, Int k, Int s);

// Construction grammar: term (+|-) term..., term = INT '*' atom | atom |
// '(' expr ')', atom = P[a..b] | P[b] | P{I t} | P{T t} | P{T4'}.
// The template may use the variable 's'; it is substituted before parsing.
PointMultiset parse_construction(const std::string& spec, Int k, Int q, Int s = 0);

// Smallest k for which every atom in the spec fits.
Int infer_construction_dimension(const std::string& spec);

struct TableRow {
  std::string table;       // "I", "II", "III", "IV"
  Int k = 0;
  Int n_coef = 0, n_off = 0;  // n = n_coef * s + n_off
  Int d_coef = 0, d_off = 0;
  Int e = 0;
  Int s_min = 0;
  bool fixed = false;      // single instance, ignore s
  bool griesmer = true;
  std::string construction;    // display form
  std::string theorem_case;    // combined-bound case, or "-" for Table IV rows
  std::function<GenMatrix(Int s, const std::string& fixtures_dir)> build;
};

const std::vector<TableRow>& table_catalogue();

// Builds and enumerates a catalogue row, checking (n, k, d, e) against
// the stated values; throws std::logic_error on mismatch.
GenMatrix table_construction(const TableRow& row, Int s, const std::string& fixtures_dir);

}  // namespace afer

#endif
