#include <doctest.h>

#include "afer/bound_engine.hpp"
#include "afer/projective_geometry.hpp"

using namespace afer;

namespace {

const std::string kFixtures = AFER_FIXTURES_DIR;

const Database& db() {
  static const Database instance = [] {
    Database d;
    for (int q : {2, 3}) d.seed_two_dim(q, 200);
    SeedOptions opts;
    opts.fixtures_dir = kFixtures;
    opts.verify = false;
    d.seed_binary_tables(opts);
    return d;
  }();
  return instance;
}

}  // namespace

TEST_CASE("residual bound") {
  auto t1 = bound_L1(7, 3, 4, 2, db());
  CHECK(t1.applicable);
  CHECK(t1.value == 7);
  CHECK(bound_L1(9, 5, 3, 2, db()).value == 4);
  CHECK(bound_L1(8, 5, 2, 2, db()).value == 1);
  CHECK(!bound_L1(5, 2, 3, 2, db()).applicable);  // needs k >= 3
}

TEST_CASE("one step shortening bound") {
  CHECK(bound_L2(12, 3, 6, 2, db()).value == 2);
  CHECK(bound_L2(10, 4, 4, 2, db()).value == 2);
  CHECK(bound_L2(9, 4, 4, 2, db()).value == 6);
  CHECK(!bound_L2(7, 3, 4, 2, db()).applicable);  // gamma = k
}

TEST_CASE("subcode plus residual bound") {
  auto t = bound_L3(4, 3, 2, 2, db());
  CHECK(t.applicable);
  CHECK(t.value == 6);
  CHECK(bound_L3(16, 5, 8, 2, db()).value == 30);
  CHECK(bound_L3(5, 4, 2, 2, db()).value == 10);
  CHECK(!bound_L3(7, 3, 3, 2, db()).applicable);  // q must divide d
}

TEST_CASE("difference telescoping bound") {
  auto t = bound_L4(27, 4, 14, 2, db());
  CHECK(t.applicable);
  CHECK(t.value == 12);
  REQUIRE(t.k2.has_value());
  CHECK(*t.k2 == 2);
  REQUIRE(t.sigma.has_value());
  CHECK(*t.sigma == 3);
  CHECK(bound_L4(12, 4, 6, 2, db()).value == 12);
  // with a single admissible subcode dimension it coincides with the
  // residual bound
  CHECK(bound_L4(7, 3, 4, 2, db()).value == bound_L1(7, 3, 4, 2, db()).value);
}

TEST_CASE("minihyper rank bound") {
  RankCapRegistry reg;
  auto t = bound_L5(11, 4, 5, 2, db(), reg);
  CHECK(t.applicable);
  CHECK(t.value == 6);
  REQUIRE(t.rank_cap.has_value());
  CHECK(*t.rank_cap == 3);
  CHECK(bound_L5(26, 4, 13, 2, db(), reg).value == 6);
  CHECK(!bound_L5(12, 4, 6, 2, db(), reg).applicable);  // reduced length degenerates to 0
}

TEST_CASE("rank cap registry") {
  RankCapRegistry reg;
  auto builtin = reg.resolve(4, 1, 3, 2);
  REQUIRE(builtin.has_value());
  CHECK(builtin->cap == 3);
  CHECK(!reg.resolve(6, 2, 4, 2).has_value());
  reg.add(6, 2, 4, 2, 3, "catalogued cap");
  auto added = reg.resolve(6, 2, 4, 2);
  REQUIRE(added.has_value());
  CHECK(added->cap == 3);
}

TEST_CASE("combined bound anchors") {
  RankCapRegistry reg;
  auto a = combined_bound(7, 5, 2, db(), reg);
  CHECK(a.value == 4);
  CHECK(a.winner == "L2");
  auto b = combined_bound(12, 3, 2, db(), reg);
  CHECK(b.value == 2);
  CHECK(b.winner == "L2");
  auto c = combined_bound(16, 5, 2, db(), reg);
  CHECK(c.value == 30);
  CHECK(c.winner == "L3");
  auto d = combined_bound(11, 4, 2, db(), reg);
  CHECK(d.value == 6);
  CHECK(d.winner == "L5");
  auto e = combined_bound(13, 5, 2, db(), reg);
  CHECK(e.d == 5);
  CHECK(e.d_exact);
  CHECK(!e.griesmer_optimal);  // 13 < griesmer_length(5, 6, 2)
  CHECK(e.value == 1);
  CHECK(e.winner == "L1");
}

TEST_CASE("simplex dimensions are reached exactly") {
  RankCapRegistry reg;
  Database d = db();
  d.build_dimension(3, 2, 70, reg);
  d.build_dimension(4, 2, 70, reg);
  d.build_dimension(5, 2, 70, reg);
  auto cb = combined_bound(63, 6, 2, d, reg);
  CHECK(cb.d == 32);
  CHECK(cb.value == 63);
}

TEST_CASE("nonextendable advisory bound") {
  CHECK(bound_nonextendable(7, 5, 2, 2, db()).value == 5);
  CHECK(bound_nonextendable(11, 5, 4, 2, db()).value == 4);
  CHECK_THROWS(bound_nonextendable(9, 5, 3, 2, db()));  // d must be even
  CHECK_THROWS(bound_nonextendable(8, 2, 4, 3, db()));  // binary only
}

TEST_CASE("combined value dominates every applicable trace") {
  RankCapRegistry reg;
  for (Int n = 4; n <= 40; ++n) {
    for (Int k = 3; k <= 5; ++k) {
      if (griesmer_length(k, 1, 2) > n) continue;
      auto cb = combined_bound(n, k, 2, db(), reg);
      CHECK(cb.value >= 1);  // the universal floor over GF(2)
      for (const auto& t : cb.traces) {
        if (!t.applicable) continue;
        CHECK(t.value >= 1);
        CHECK(cb.value >= t.value);
      }
    }
  }
}

TEST_CASE("improving inputs never weakens the combined bound") {
  RankCapRegistry reg;
  Database base = db();
  base.build_dimension(3, 2, 50, reg);
  base.build_dimension(4, 2, 50, reg);

  Database bumped;
  for (const auto& e : base.all_entries()) {
    DbEntry copy = e;
    if (!copy.e_exact && copy.n % 3 == 0) copy.e_lower += 1;
    bumped.upsert(copy);
  }
  for (Int n = 10; n <= 50; ++n) {
    auto before = combined_bound(n, 5, 2, base, reg);
    auto after = combined_bound(n, 5, 2, bumped, reg);
    CAPTURE(n);
    CHECK(after.value >= before.value);
  }
}

TEST_CASE("trace serialization") {
  RankCapRegistry reg;
  auto cb = combined_bound(16, 5, 2, db(), reg);
  auto j = cb.to_json();
  CHECK(j["n"] == 16);
  CHECK(j["value"] == 30);
  CHECK(j["winner"] == "L3");
  CHECK(j["traces"].is_array());
  bool saw_l3 = false;
  for (const auto& t : j["traces"]) {
    if (t["bound"] == "L3") {
      saw_l3 = true;
      CHECK(t["applicable"] == true);
      CHECK(t["value"] == 30);
    }
  }
  CHECK(saw_l3);
}
