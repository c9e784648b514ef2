#include "afer/code_db.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "afer/bound_engine.hpp"
#include "afer/linear_codes.hpp"
#include "afer/projective_geometry.hpp"

namespace afer {

namespace {

constexpr int kSchemaVersion = 1;

using Key = std::tuple<Int, Int, Int>;  // (q, k, n)

Key key_of(const DbEntry& e) { return {e.q, e.k, e.n}; }

}  // namespace

std::string to_string(DKind k) {
  switch (k) {
    case DKind::GriesmerAttained: return "griesmer_attained";
    case DKind::ExactTable: return "exact_table";
    case DKind::Conditional: return "conditional";
  }
  throw std::logic_error("bad DKind");
}

DKind dkind_from_string(const std::string& s) {
  if (s == "griesmer_attained") return DKind::GriesmerAttained;
  if (s == "exact_table") return DKind::ExactTable;
  if (s == "conditional") return DKind::Conditional;
  throw std::invalid_argument("unknown d_kind: " + s);
}

void Database::upsert(const DbEntry& entry) {
  auto it = entries_.find(key_of(entry));
  if (it == entries_.end()) {
    entries_.emplace(key_of(entry), entry);
    return;
  }
  DbEntry& cur = it->second;
  if (cur.e_exact && entry.e_exact && *cur.e_exact != *entry.e_exact) {
    std::ostringstream msg;
    msg << "conflicting exact values for (" << entry.n << "," << entry.k << ","
        << entry.q << "): " << *cur.e_exact << " vs " << *entry.e_exact;
    throw std::logic_error(msg.str());
  }
  // exact data wins; lower bounds only ever rise
  if (entry.d_kind == DKind::ExactTable && cur.d_kind != DKind::ExactTable) {
    Int keep = std::max(cur.e_lower, entry.e_lower);
    cur = entry;
    cur.e_lower = keep;
  }
  if (entry.e_exact && !cur.e_exact) cur.e_exact = *entry.e_exact;
  if (entry.e_lower > cur.e_lower) {
    cur.e_lower = entry.e_lower;
    if (cur.d_kind != DKind::ExactTable) cur.provenance = entry.provenance;
  }
  if (cur.e_exact && cur.e_lower > *cur.e_exact)
    throw std::logic_error("e_lower exceeds e_exact");
}

Int Database::seed_two_dim(Int q, Int n_max) {
  if (n_max < 2) throw std::invalid_argument("seed_two_dim: n_max >= 2 required");
  Int count = 0;
  for (Int n = 2; n <= n_max; ++n) {
    auto ans = two_dim_optimal(n, q);
    DbEntry e;
    e.n = n;
    e.k = 2;
    e.q = q;
    e.d_value = ans.d;
    e.d_kind = DKind::ExactTable;
    e.e_lower = ans.e;
    e.e_exact = ans.e;
    e.provenance = "two_dim_closed_form";
    upsert(e);
    ++count;
  }
  return count;
}

Int Database::seed_binary_tables(const SeedOptions& opts) {
  Int count = 0;
  for (const auto& row : table_catalogue()) {
    Int s_max = row.s_min;
    if (!row.fixed) {
      if (row.k == 3) s_max = std::max(row.s_min, opts.s_max_dim3);
      else if (row.k == 4) s_max = std::max(row.s_min, opts.s_max_dim4);
      else s_max = std::max(row.s_min, opts.s_max_dim5);
    }
    for (Int s = row.s_min; s <= s_max; ++s) {
      Int n = row.fixed ? row.n_off : row.n_coef * s + row.n_off;
      Int d = row.fixed ? row.d_off : row.d_coef * s + row.d_off;
      if (opts.verify) table_construction(row, s, opts.fixtures_dir);
      DbEntry e;
      e.n = n;
      e.k = row.k;
      e.q = 2;
      e.d_value = d;
      e.d_kind = DKind::ExactTable;
      e.e_lower = row.e;
      e.e_exact = row.e;
      e.provenance = "table_" + row.table + "_n" + std::to_string(n);
      upsert(e);
      ++count;
      if (row.fixed) break;
    }
  }
  return count;
}

Int Database::build_dimension(Int k, Int q, Int n_max, const RankCapRegistry& registry) {
  if (k < 3) throw std::invalid_argument("build_dimension: k >= 3 required");
  Int updated = 0;
  for (Int n = griesmer_length(k, 1, q); n <= n_max; ++n) {
    auto existing = query(n, k, q);
    if (existing && existing->d_kind == DKind::ExactTable && existing->e_exact) continue;
    auto cb = combined_bound(n, k, q, *this, registry);
    DbEntry e;
    e.n = n;
    e.k = k;
    e.q = q;
    e.d_value = cb.d;
    e.d_kind = cb.d_exact ? DKind::ExactTable : DKind::GriesmerAttained;
    if (cb.value >= q - 1 && !cb.winner.empty() && cb.winner != "floor") {
      e.e_lower = cb.value;
      e.provenance = "iter_" + cb.winner;
    } else {
      e.e_lower = q - 1;
      e.provenance = "floor";
    }
    upsert(e);
    ++updated;
  }
  return updated;
}

std::optional<DbEntry> Database::query(Int n, Int k, Int q) const {
  auto it = entries_.find(Key{q, k, n});
  if (it != entries_.end()) return it->second;
  if (k == 1 && n >= 1) {
    DbEntry e;
    e.n = n;
    e.k = 1;
    e.q = q;
    e.d_value = n;
    e.d_kind = DKind::ExactTable;
    e.e_lower = q - 1;
    e.e_exact = q - 1;
    e.provenance = "repetition_code";
    return e;
  }
  if (k == 2 && n >= 2) {
    auto ans = two_dim_optimal(n, q);
    DbEntry e;
    e.n = n;
    e.k = 2;
    e.q = q;
    e.d_value = ans.d;
    e.d_kind = DKind::ExactTable;
    e.e_lower = ans.e;
    e.e_exact = ans.e;
    e.provenance = "two_dim_closed_form";
    return e;
  }
  return std::nullopt;
}

Lookup Database::e_optimal(Int n, Int k, Int q) const {
  auto e = query(n, k, q);
  if (!e || e->d_kind == DKind::Conditional) return {};
  Lookup lk;
  lk.status = LookupStatus::Value;
  lk.value = e->e_exact ? *e->e_exact : e->e_lower;
  lk.exact = e->e_exact.has_value() && e->d_kind == DKind::ExactTable;
  lk.source = e->provenance;
  return lk;
}

Lookup Database::e_at_distance(Int n, Int k, Int d, Int q) const {
  auto e = query(n, k, q);
  if (!e || e->d_kind == DKind::Conditional) return {};
  if (d < e->d_value) {
    Lookup lk;
    lk.status = LookupStatus::Zero;
    lk.value = 0;
    lk.exact = e->d_kind == DKind::ExactTable;
    lk.source = e->provenance;
    return lk;
  }
  if (d == e->d_value) return e_optimal(n, k, q);
  return {};
}

Lookup Database::e_floor(Int n, Int k, Int d, Int q) const {
  auto e = query(n, k, q);
  if (!e || e->d_kind == DKind::Conditional) return {};
  if (d > e->d_value) return {};  // no such code is certified to exist
  Lookup lk;
  lk.status = LookupStatus::Value;
  lk.value = q - 1;
  lk.exact = false;
  lk.source = "universal_floor";
  return lk;
}

std::vector<DbEntry> Database::all_entries() const {
  std::vector<DbEntry> out;
  for (const auto& [key, e] : entries_) out.push_back(e);
  return out;
}

void Database::save(const std::string& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::set<std::pair<Int, Int>> groups;
  for (const auto& [key, e] : entries_) groups.insert({e.k, e.q});
  for (auto [k, q] : groups) {
    std::ostringstream name;
    name << "db_k" << k << "_q" << q << ".jsonl";
    std::ofstream out(fs::path(dir) / name.str());
    nlohmann::ordered_json header;
    header["schema"] = kSchemaVersion;
    header["k"] = k;
    header["q"] = q;
    out << header.dump() << '\n';
    for (const auto& [key, e] : entries_) {
      if (e.k != k || e.q != q) continue;
      nlohmann::ordered_json j;
      j["n"] = e.n;
      j["k"] = e.k;
      j["q"] = e.q;
      j["d"] = e.d_value;
      j["d_kind"] = to_string(e.d_kind);
      j["e_lower"] = e.e_lower;
      if (e.e_exact) j["e_exact"] = *e.e_exact;
      else j["e_exact"] = nullptr;
      j["prov"] = e.provenance;
      out << j.dump() << '\n';
    }
  }
  std::ofstream csv(fs::path(dir) / "db.csv");
  csv << "n,k,q,d,e_lower,e_exact,provenance\n";
  for (const auto& [key, e] : entries_) {
    csv << e.n << ',' << e.k << ',' << e.q << ',' << e.d_value << ',' << e.e_lower << ',';
    if (e.e_exact) csv << *e.e_exact;
    csv << ',' << e.provenance << '\n';
  }
}

void Database::load(const std::string& dir) {
  namespace fs = std::filesystem;
  for (const auto& dirent : fs::directory_iterator(dir)) {
    auto name = dirent.path().filename().string();
    if (name.rfind("db_k", 0) != 0 || dirent.path().extension() != ".jsonl") continue;
    std::ifstream in(dirent.path());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty database file " + name);
    auto header = nlohmann::json::parse(line);
    if (header.at("schema").get<int>() != kSchemaVersion)
      throw std::runtime_error("unsupported schema version in " + name);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      DbEntry e;
      e.n = j.at("n").get<Int>();
      e.k = j.at("k").get<Int>();
      e.q = j.at("q").get<Int>();
      e.d_value = j.at("d").get<Int>();
      e.d_kind = dkind_from_string(j.at("d_kind").get<std::string>());
      e.e_lower = j.at("e_lower").get<Int>();
      if (!j.at("e_exact").is_null()) e.e_exact = j.at("e_exact").get<Int>();
      e.provenance = j.at("prov").get<std::string>();
      upsert(e);
    }
  }
}

}  // namespace afer
