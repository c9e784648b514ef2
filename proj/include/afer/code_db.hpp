#ifndef AFER_CODE_DB_HPP
#define AFER_CODE_DB_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "afer/bounds_core.hpp"

namespace afer {

class RankCapRegistry;

enum class DKind {
  GriesmerAttained,  // d is the Griesmer-certified value, attainment assumed
  ExactTable,        // d and e backed by a verified table row or fixture
  Conditional,       // d itself uncertain; excluded from bound consumption
};

std::string to_string(DKind k);
DKind dkind_from_string(const std::string& s);

struct DbEntry {
  Int n = 0, k = 0, q = 0;
  Int d_value = 0;
  DKind d_kind = DKind::Conditional;
  Int e_lower = 0;
  std::optional<Int> e_exact;
  std::string provenance;
};

enum class LookupStatus { Value, Zero, Unresolved };

struct Lookup {
  LookupStatus status = LookupStatus::Unresolved;
  Int value = 0;
  bool exact = false;
  std::string source;

  bool resolved() const { return status != LookupStatus::Unresolved; }
};

struct SeedOptions {
  Int s_max_dim3 = 12;
  Int s_max_dim4 = 6;
  Int s_max_dim5 = 3;
  bool verify = true;  // enumerate each seeded row and compare
  std::string fixtures_dir = "fixtures";
};

class Database {
 public:
  // Exact two-dimensional entries from the closed form, 2 <= n <= n_max.
  Int seed_two_dim(Int q, Int n_max);

  // Exact binary entries for every catalogue row instantiated over its
  // s range; throws if verification contradicts a stated value.
  Int seed_binary_tables(const SeedOptions& opts = {});

  // Iterative lower bounds for one dimension; returns entries updated.
  Int build_dimension(Int k, Int q, Int n_max, const RankCapRegistry& registry);

  // Stored or synthesized (k <= 2) entry.
  std::optional<DbEntry> query(Int n, Int k, Int q) const;

  // e(n,k,q): the optimal-distance error coefficient.
  Lookup e_optimal(Int n, Int k, Int q) const;

  // e_d(n,k,q): Zero below the certified distance, Value at it,
  // Unresolved above it or for conditional entries.
  Lookup e_at_distance(Int n, Int k, Int d, Int q) const;

  // Minimum A_d over all codes of the given parameters; defaults to q-1
  // when a code is certified to exist.
  Lookup e_floor(Int n, Int k, Int d, Int q) const;

  // Raises e_lower monotonically; exact data never degrades.
  void upsert(const DbEntry& entry);

  // JSON-lines per (k,q) plus a CSV export, deterministic output.
  void save(const std::string& dir) const;
  void load(const std::string& dir);

  std::size_t size() const { return entries_.size(); }
  std::vector<DbEntry> all_entries() const;

 private:
  std::map<std::tuple<Int, Int, Int>, DbEntry> entries_;  // key (q, k, n)
};

}  // namespace afer

#endif
