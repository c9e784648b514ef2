#ifndef AFER_BOUND_ENGINE_HPP
#define AFER_BOUND_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "afer/bounds_core.hpp"
#include "afer/code_db.hpp"

namespace afer {

struct BoundTrace {
  std::string bound_id;  // L1..L5, NONEXT
  bool applicable = false;
  Int value = 0;
  bool conditional = false;  // relies on unverified Griesmer attainability
  std::optional<Int> t;         // L1 remainder
  std::optional<Int> mu;        // L3
  std::optional<Int> sigma;     // L4
  std::optional<Int> k2;        // L4 winning subcode dimension
  std::optional<Int> rank_cap;  // L5 k'
  std::vector<std::string> inputs_resolved;
  std::vector<std::string> delta_notes;  // divisibility round-ups applied
  std::string reason;  // failed precondition when inapplicable

  nlohmann::ordered_json to_json() const;
};

// Proven upper bounds on the rank of {f, m; dim, q}-minihypers. The
// built-in rule caps {f, 1; dim, q} at rank f-1.
class RankCapRegistry {
 public:
  void add(Int f, Int m, Int dim, Int q, Int cap, const std::string& provenance);

  struct Cap {
    Int cap = 0;
    std::string provenance;
  };
  std::optional<Cap> resolve(Int f, Int m, Int dim, Int q) const;

 private:
  std::map<std::tuple<Int, Int, Int, Int>, Cap> entries_;
};

BoundTrace bound_L1(Int n, Int k, Int d, Int q, const Database& db);
BoundTrace bound_L2(Int n, Int k, Int d, Int q, const Database& db);
BoundTrace bound_L3(Int n, Int k, Int d, Int q, const Database& db);
BoundTrace bound_L4(Int n, Int k, Int d, Int q, const Database& db);
BoundTrace bound_L5(Int n, Int k, Int d, Int q, const Database& db,
                    const RankCapRegistry& registry);

struct CombinedBound {
  Int n = 0, k = 0, q = 0;
  Int d = 0;
  bool d_exact = false;  // from a verified entry rather than the Griesmer value
  bool griesmer_optimal = false;
  std::vector<BoundTrace> traces;
  Int value = 0;
  std::string winner;
  bool conditional = false;

  nlohmann::ordered_json to_json() const;
};

CombinedBound combined_bound(Int n, Int k, Int q, const Database& db,
                             const RankCapRegistry& registry);

// Advisory bound for proven non-extendable binary codes of even d;
// never folded into combined_bound.
BoundTrace bound_nonextendable(Int n, Int k, Int d, Int q, const Database& db);

}  // namespace afer

#endif
