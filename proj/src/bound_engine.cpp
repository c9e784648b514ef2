#include "afer/bound_engine.hpp"

#include <algorithm>
#include <sstream>

namespace afer {

namespace {

std::string describe(Int n, Int k, Int q, std::optional<Int> d, const Lookup& lk) {
  std::ostringstream out;
  if (d)
    out << "e_" << *d << "(" << n << "," << k << "," << q << ")";
  else
    out << "e(" << n << "," << k << "," << q << ")";
  switch (lk.status) {
    case LookupStatus::Value:
      out << "=" << lk.value << (lk.exact ? " [exact]" : " [lower]");
      break;
    case LookupStatus::Zero: out << "=0 [below optimal distance]"; break;
    case LookupStatus::Unresolved: out << " unresolved"; break;
  }
  if (!lk.source.empty()) out << " via " << lk.source;
  return out.str();
}

BoundTrace inapplicable(std::string id, std::string reason) {
  BoundTrace t;
  t.bound_id = std::move(id);
  t.applicable = false;
  t.value = 0;
  t.reason = std::move(reason);
  return t;
}

void note_roundup(BoundTrace& t, Int raw, Int value, Int q) {
  if (value != raw) {
    std::ostringstream out;
    out << "rounded " << raw << " up to the multiple " << value << " of " << (q - 1);
    t.delta_notes.push_back(out.str());
  }
}

bool griesmer_optimal_input(Int n, Int k, Int d, Int q) {
  return griesmer_length(k, d, q) <= n && n < griesmer_length(k, d + 1, q);
}

}  // namespace

nlohmann::ordered_json BoundTrace::to_json() const {
  nlohmann::ordered_json j;
  j["bound"] = bound_id;
  j["applicable"] = applicable;
  j["value"] = value;
  j["conditional"] = conditional;
  if (t) j["t"] = *t;
  if (mu) j["mu"] = *mu;
  if (sigma) j["sigma"] = *sigma;
  if (k2) j["k2"] = *k2;
  if (rank_cap) j["rank_cap"] = *rank_cap;
  if (!inputs_resolved.empty()) j["inputs"] = inputs_resolved;
  if (!delta_notes.empty()) j["delta_notes"] = delta_notes;
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

nlohmann::ordered_json CombinedBound::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["q"] = q;
  j["d"] = d;
  j["d_exact"] = d_exact;
  j["griesmer_optimal"] = griesmer_optimal;
  j["value"] = value;
  j["winner"] = winner;
  j["conditional"] = conditional;
  auto traces_json = nlohmann::ordered_json::array();
  for (const auto& t : traces) traces_json.push_back(t.to_json());
  j["traces"] = traces_json;
  return j;
}

void RankCapRegistry::add(Int f, Int m, Int dim, Int q, Int cap,
                          const std::string& provenance) {
  entries_[{f, m, dim, q}] = Cap{cap, provenance};
}

std::optional<RankCapRegistry::Cap> RankCapRegistry::resolve(Int f, Int m, Int dim,
                                                             Int q) const {
  auto it = entries_.find({f, m, dim, q});
  if (it != entries_.end()) return it->second;
  if (m == 1 && f >= 1)
    return Cap{f - 1, "built-in cap for {f,1;dim,q} minihypers"};
  return std::nullopt;
}

BoundTrace bound_L1(Int n, Int k, Int d, Int q, const Database& db) {
  BoundTrace t;
  t.bound_id = "L1";
  if (k < 3) return inapplicable("L1", "k >= 3 required");
  Int rem = d % q;
  Int tt = rem == 0 ? q : rem;
  t.t = tt;
  Int dr = ceil_div(d, q);
  Lookup er = db.e_at_distance(n - d, k - 1, dr, q);
  t.inputs_resolved.push_back(describe(n - d, k - 1, q, dr, er));
  if (!er.resolved())
    return inapplicable("L1", "residual lookup " + describe(n - d, k - 1, q, dr, er));
  t.applicable = true;
  t.conditional = !er.exact;
  Int raw = (q - 1) + tt * er.value;
  t.value = q == 2 ? tt * er.value + 1 : ceil_to_multiple(raw, q);
  note_roundup(t, raw, t.value, q);
  return t;
}

BoundTrace bound_L2(Int n, Int k, Int d, Int q, const Database& db) {
  if (!griesmer_optimal_input(n, k, d, q))
    return inapplicable("L2", "Griesmer-optimal input required");
  auto gm = gamma(n, k, d, q);
  if (gm.value >= k || gm.fallback)
    return inapplicable("L2", "gamma(n,k,d) < k required");
  BoundTrace t;
  t.bound_id = "L2";
  Lookup e = db.e_optimal(n - d - 1, k - 1, q);
  t.inputs_resolved.push_back(describe(n - d - 1, k - 1, q, std::nullopt, e));
  if (!e.resolved())
    return inapplicable("L2", "lookup " + describe(n - d - 1, k - 1, q, std::nullopt, e));
  t.applicable = true;
  t.conditional = !e.exact;
  t.value = ceil_to_multiple(e.value, q);
  note_roundup(t, e.value, t.value, q);
  return t;
}

BoundTrace bound_L3(Int n, Int k, Int d, Int q, const Database& db) {
  if (!griesmer_optimal_input(n, k, d, q))
    return inapplicable("L3", "Griesmer-optimal input required");
  // the subcode decomposition behind this bound needs a minimum-weight
  // codeword outside a (k-1)-dimensional subcode, which is only guaranteed
  // at the exact Griesmer length ([8,3,4;3] is a counterexample at g+1)
  if (n != griesmer_length(k, d, q))
    return inapplicable("L3", "n = g_q(k,d) required");
  if (d % q != 0) return inapplicable("L3", "q | d required");
  auto gm = gamma(n, k, d, q);
  Int k1 = std::min(gm.value, k - 1);
  if (k1 < 2) return inapplicable("L3", "min(gamma, k-1) >= 2 required");

  BoundTrace t;
  t.bound_id = "L3";
  Int s = ceil_div(d, ipow(q, k - 1));
  Lookup mu1 = db.e_optimal(griesmer_length(k1, d, q), k1, q);
  Lookup mu2 = db.e_at_distance(n - s, k - 1, d, q);
  t.inputs_resolved.push_back(describe(griesmer_length(k1, d, q), k1, q, std::nullopt, mu1));
  t.inputs_resolved.push_back(describe(n - s, k - 1, q, d, mu2));
  // mu is a max of two lower bounds; either resolved member keeps it sound
  std::optional<Int> mu;
  bool mu_exact = false;
  for (const Lookup& lk : {mu1, mu2}) {
    if (!lk.resolved()) continue;
    if (!mu || lk.value > *mu || (lk.value == *mu && lk.exact)) {
      mu = lk.value;
      mu_exact = lk.exact;
    }
  }
  if (!mu) return inapplicable("L3", "both mu lookups unresolved");
  t.mu = *mu;
  Lookup er = db.e_optimal(n - d, k - 1, q);
  t.inputs_resolved.push_back(describe(n - d, k - 1, q, std::nullopt, er));
  if (!er.resolved())
    return inapplicable("L3", "lookup " + describe(n - d, k - 1, q, std::nullopt, er));
  t.applicable = true;
  t.conditional = !(er.exact && mu_exact);
  Int raw = *mu + (q - 1) + (q - 1) * er.value;
  t.value = q == 2 ? er.value + *mu + 1 : ceil_to_multiple(raw, q);
  note_roundup(t, raw, t.value, q);
  return t;
}

BoundTrace bound_L4(Int n, Int k, Int d, Int q, const Database& db) {
  if (!griesmer_optimal_input(n, k, d, q))
    return inapplicable("L4", "Griesmer-optimal input required");
  auto gm = gamma(n, k, d, q);
  Int k1 = std::min(gm.value, k - 1);
  if (k1 < 2) return inapplicable("L4", "min(gamma, k-1) >= 2 required");

  BoundTrace t;
  t.bound_id = "L4";
  bool any = false;
  for (Int k2 = 1; k2 < k1; ++k2) {
    Lookup lo = db.e_optimal(griesmer_length(k2, d, q), k2, q);
    Lookup hi = db.e_optimal(griesmer_length(k2 + 1, d, q), k2 + 1, q);
    // sigma is a difference; both terms must be exact or raising the
    // subtrahend's lower bound could inflate the result unsoundly
    if (!lo.resolved() || !hi.resolved() || !lo.exact || !hi.exact) {
      std::ostringstream note;
      note << "k2=" << k2 << " skipped: sigma needs exact entries";
      t.delta_notes.push_back(note.str());
      continue;
    }
    Int sigma = hi.value - lo.value;
    if (sigma <= 0) continue;
    Int dr = ceil_div(d, ipow(q, k2));
    Int nr = n - griesmer_length(k2, d, q);
    if (dr != griesmer_max_distance(nr, k - k2, q)) {
      std::ostringstream note;
      note << "k2=" << k2 << " skipped: residual distance " << dr
           << " differs from the Griesmer value for length " << nr;
      t.delta_notes.push_back(note.str());
      continue;
    }
    Lookup er = db.e_at_distance(nr, k - k2, dr, q);
    t.inputs_resolved.push_back(describe(nr, k - k2, q, dr, er));
    if (!er.resolved()) continue;
    Int raw = lo.value + ceil_div(sigma * er.value, q - 1);
    Int candidate = ceil_to_multiple(raw, q);
    if (!any || candidate > t.value) {
      t.value = candidate;
      t.k2 = k2;
      t.sigma = sigma;
      t.conditional = !er.exact;
      note_roundup(t, raw, candidate, q);
    }
    any = true;
  }
  if (!any) return inapplicable("L4", "no evaluable k2");
  t.applicable = true;
  return t;
}

BoundTrace bound_L5(Int n, Int k, Int d, Int q, const Database& db,
                    const RankCapRegistry& registry) {
  if (n != griesmer_length(k, d, q))
    return inapplicable("L5", "n = g_q(k,d) required");
  Int s = ceil_div(d, ipow(q, k - 1));
  Int f = s * projective_point_count(k, q) - n;
  Int m = s * projective_point_count(k - 1, q) - n + d;
  auto cap = registry.resolve(f, m, k - 1, q);
  if (!cap) {
    std::ostringstream out;
    out << "no rank cap known for the {" << f << "," << m << ";" << k - 1 << "," << q
        << "} minihyper";
    return inapplicable("L5", out.str());
  }
  Int kp = cap->cap;
  if (kp >= k || kp < 1)
    return inapplicable("L5", "rank cap does not reduce the dimension");
  BoundTrace t;
  t.bound_id = "L5";
  t.rank_cap = kp;
  Int nr = n + s * projective_point_count(kp, q) - s * projective_point_count(k, q);
  Lookup e = db.e_optimal(nr, kp, q);
  t.inputs_resolved.push_back(describe(nr, kp, q, std::nullopt, e));
  t.inputs_resolved.push_back("rank cap " + std::to_string(kp) + " via " + cap->provenance);
  if (!e.resolved())
    return inapplicable("L5", "lookup " + describe(nr, kp, q, std::nullopt, e));
  t.applicable = true;
  t.conditional = !e.exact;
  t.value = ipow(q, k - kp) * e.value;
  return t;
}

CombinedBound combined_bound(Int n, Int k, Int q, const Database& db,
                             const RankCapRegistry& registry) {
  if (k < 3) throw std::invalid_argument("combined_bound: k >= 3 required");
  CombinedBound out;
  out.n = n;
  out.k = k;
  out.q = q;
  auto entry = db.query(n, k, q);
  if (entry && entry->d_kind == DKind::ExactTable) {
    out.d = entry->d_value;
    out.d_exact = true;
  } else {
    out.d = griesmer_max_distance(n, k, q);
    out.d_exact = false;
    out.conditional = true;
  }
  out.griesmer_optimal = griesmer_optimal_input(n, k, out.d, q);

  out.traces.push_back(bound_L1(n, k, out.d, q, db));
  if (out.griesmer_optimal) {
    out.traces.push_back(bound_L2(n, k, out.d, q, db));
    out.traces.push_back(bound_L3(n, k, out.d, q, db));
    out.traces.push_back(bound_L4(n, k, out.d, q, db));
    out.traces.push_back(bound_L5(n, k, out.d, q, db, registry));
  } else {
    out.traces.push_back(inapplicable("L2", "d not Griesmer-certified"));
    out.traces.push_back(inapplicable("L3", "d not Griesmer-certified"));
    out.traces.push_back(inapplicable("L4", "d not Griesmer-certified"));
    out.traces.push_back(inapplicable("L5", "d not Griesmer-certified"));
  }
  out.value = 0;
  bool winner_conditional = false;
  for (const auto& t : out.traces) {
    if (!t.applicable) continue;
    if (t.value > out.value || (t.value == out.value && winner_conditional && !t.conditional)) {
      out.value = t.value;
      out.winner = t.bound_id;
      winner_conditional = t.conditional;
    }
  }
  out.conditional = out.conditional || winner_conditional;
  // the universal floor: a nonzero code always has at least q-1 words
  // of minimum weight
  if (out.value < q - 1) {
    out.value = q - 1;
    if (out.winner.empty()) out.winner = "floor";
  }
  return out;
}

BoundTrace bound_nonextendable(Int n, Int k, Int d, Int q, const Database& db) {
  if (q != 2) throw std::invalid_argument("bound_nonextendable: binary only");
  if (d % 2 != 0) throw std::invalid_argument("bound_nonextendable: even d required");
  BoundTrace t;
  t.bound_id = "NONEXT";
  Int s = ceil_div(n, ipow(2, k) - 1);
  Lookup x = db.e_at_distance(n - s, k - 1, d, 2);
  t.inputs_resolved.push_back(describe(n - s, k - 1, 2, d, x));
  if (!x.resolved())
    return inapplicable("NONEXT", "lookup " + describe(n - s, k - 1, 2, d, x));
  Lookup ef = db.e_floor(n - d, k - 1, d / 2, 2);
  t.inputs_resolved.push_back("floor " + describe(n - d, k - 1, 2, d / 2, ef));
  t.applicable = true;
  t.conditional = !x.exact;
  t.value = x.value + 2;
  if (ef.resolved()) t.value = std::max(t.value, x.value + ef.value + 1);
  return t;
}

}  // namespace afer
