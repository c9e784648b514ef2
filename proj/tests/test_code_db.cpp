#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "afer/bound_engine.hpp"
#include "afer/code_db.hpp"

using namespace afer;

namespace {

const std::string kFixtures = AFER_FIXTURES_DIR;

Database seeded() {
  Database db;
  db.seed_two_dim(2, 60);
  db.seed_two_dim(3, 30);
  SeedOptions opts;
  opts.fixtures_dir = kFixtures;
  opts.verify = false;
  db.seed_binary_tables(opts);
  return db;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("two dimensional seeding") {
  Database db;
  CHECK(db.seed_two_dim(2, 10) == 9);
  auto e3 = db.query(3, 2, 2);
  REQUIRE(e3.has_value());
  CHECK(e3->d_value == 2);
  CHECK(e3->e_exact == 3);
  auto e5 = db.query(5, 2, 2);
  CHECK(e5->d_value == 3);
  CHECK(e5->e_exact == 2);
  db.seed_two_dim(3, 10);
  CHECK(db.query(4, 2, 3)->e_exact == 8);
}

TEST_CASE("synthesized low dimensional entries") {
  Database db;
  auto rep = db.query(9, 1, 3);
  REQUIRE(rep.has_value());
  CHECK(rep->d_value == 9);
  CHECK(rep->e_exact == 2);
  auto two = db.query(7, 2, 2);  // synthesized without seeding
  REQUIRE(two.has_value());
  CHECK(two->d_value == 4);
  CHECK(!db.query(7, 3, 2).has_value());
}

TEST_CASE("table seeding") {
  Database db = seeded();
  auto s3 = db.query(7, 3, 2);
  REQUIRE(s3.has_value());
  CHECK(s3->d_value == 4);
  CHECK(s3->e_exact == 7);
  CHECK(s3->d_kind == DKind::ExactTable);

  CHECK(db.query(14, 5, 2)->d_value == 6);
  CHECK(db.query(14, 5, 2)->e_exact == 7);
  CHECK(db.query(13, 5, 2)->d_value == 5);
  CHECK(db.query(13, 5, 2)->e_exact == 3);
  CHECK(db.query(31, 5, 2)->d_value == 16);
  CHECK(db.query(31, 5, 2)->e_exact == 31);
}

TEST_CASE("lookup semantics") {
  Database db = seeded();
  CHECK(db.e_at_distance(6, 4, 1, 2).status == LookupStatus::Zero);
  auto at2 = db.e_at_distance(6, 4, 2, 2);
  CHECK(at2.status == LookupStatus::Value);
  CHECK(at2.value == 3);
  CHECK(at2.exact);
  CHECK(!db.e_at_distance(6, 4, 3, 2).resolved());  // above the certified d
  CHECK(!db.e_optimal(150, 5, 2).resolved());

  auto fl = db.e_floor(6, 4, 2, 2);
  CHECK(fl.status == LookupStatus::Value);
  CHECK(fl.value == 1);
  CHECK(!db.e_floor(6, 4, 3, 2).resolved());
}

TEST_CASE("upsert rules") {
  Database db;
  DbEntry a{10, 3, 2, 4, DKind::GriesmerAttained, 2, std::nullopt, "iter_L1"};
  db.upsert(a);
  DbEntry lower{10, 3, 2, 4, DKind::GriesmerAttained, 1, std::nullopt, "weaker"};
  db.upsert(lower);
  CHECK(db.query(10, 3, 2)->e_lower == 2);  // never decreases
  DbEntry exact{10, 3, 2, 4, DKind::ExactTable, 3, 3, "table"};
  db.upsert(exact);
  CHECK(db.query(10, 3, 2)->e_exact == 3);
  CHECK(db.query(10, 3, 2)->d_kind == DKind::ExactTable);
  DbEntry clash{10, 3, 2, 4, DKind::ExactTable, 4, 4, "other"};
  CHECK_THROWS(db.upsert(clash));
  DbEntry overflow{10, 3, 2, 4, DKind::GriesmerAttained, 9, std::nullopt, "bad"};
  CHECK_THROWS(db.upsert(overflow));
}

TEST_CASE("iterative build and persistence") {
  Database db = seeded();
  RankCapRegistry registry;
  // dimensions 3 and 4 are fully seeded as exact up to this range
  CHECK(db.build_dimension(3, 2, 40, registry) == 0);
  CHECK(db.build_dimension(4, 2, 40, registry) == 0);
  CHECK(db.build_dimension(5, 2, 40, registry) == 0);
  CHECK(db.build_dimension(6, 2, 40, registry) > 0);
  CHECK(db.query(31, 6, 2).has_value());
  for (const auto& e : db.all_entries()) {
    CHECK(e.e_lower >= 1);
    if (e.e_exact) CHECK(e.e_lower <= *e.e_exact);
  }

  namespace fs = std::filesystem;
  auto dir1 = fs::temp_directory_path() / "afer_db_a";
  auto dir2 = fs::temp_directory_path() / "afer_db_b";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  db.save(dir1.string());

  Database loaded;
  loaded.load(dir1.string());
  CHECK(loaded.size() == db.size());
  loaded.save(dir2.string());
  for (const auto& f : fs::directory_iterator(dir1)) {
    CAPTURE(f.path().filename().string());
    CHECK(slurp(f.path()) == slurp(dir2 / f.path().filename()));
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("rebuilds are deterministic") {
  auto build = [] {
    Database db = seeded();
    RankCapRegistry registry;
    db.build_dimension(3, 2, 35, registry);
    db.build_dimension(4, 2, 35, registry);
    db.build_dimension(5, 2, 35, registry);
    db.build_dimension(6, 2, 35, registry);
    return db;
  };
  namespace fs = std::filesystem;
  auto dir1 = fs::temp_directory_path() / "afer_db_c";
  auto dir2 = fs::temp_directory_path() / "afer_db_d";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  build().save(dir1.string());
  build().save(dir2.string());
  for (const auto& f : fs::directory_iterator(dir1)) {
    CAPTURE(f.path().filename().string());
    CHECK(slurp(f.path()) == slurp(dir2 / f.path().filename()));
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("schema guard on load") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "afer_db_e";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream out(dir / "db_k3_q2.jsonl");
  out << R"({"schema":99,"k":3,"q":2})" << "\n";
  out.close();
  Database db;
  CHECK_THROWS(db.load(dir.string()));
  fs::remove_all(dir);
}
