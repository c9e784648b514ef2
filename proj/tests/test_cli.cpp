#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = AFER_CLI_PATH;
const std::string kFixtures = AFER_FIXTURES_DIR;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = kCli + " --fixtures " + kFixtures + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (fgets(buf.data(), (int)buf.size(), pipe)) r.out += buf.data();
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

}  // namespace

TEST_CASE("bound command") {
  auto r = run("bound 16 5 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("combined: 30 via L3") != std::string::npos);

  auto r2 = run("bound 12 3 2");
  CHECK(r2.status == 0);
  CHECK(r2.out.find("combined: 2 via L2") != std::string::npos);

  auto j = run("bound 11 4 2 --json");
  CHECK(j.status == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["value"] == 6);
  CHECK(parsed["winner"] == "L5");
  CHECK(parsed["d"] == 5);
}

TEST_CASE("construct command") {
  auto r = run("construct \"1*P[3]\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("[7,3,4;7]_2") != std::string::npos);
  CHECK(r.out.find("2 3 7") != std::string::npos);  // header of the emitted matrix

  auto s = run("construct \"s*P[4] + P{T4}\" --s 1");
  CHECK(s.status == 0);
  CHECK(s.out.find("[20,4,10;10]_2") != std::string::npos);

  auto bad = run("construct \"1*Q[3]\"");
  CHECK(bad.status == 1);
}

TEST_CASE("verify command") {
  auto ok = run("verify " + kFixtures + "/G_13_5_5.txt --expect \"[13,5,5;3]_2\"");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("OK") != std::string::npos);

  auto bad = run("verify " + kFixtures + "/G_13_5_5.txt --expect \"[13,5,5;4]_2\"");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("table command") {
  auto r = run("table --k 4 --q 2 --s-max 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("table,n,k,d,e,bound,tight_or_gap") != std::string::npos);
  CHECK(r.out.find("II,15,4,8,15,15,tight") != std::string::npos);
}

TEST_CASE("database commands") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "afer_cli_db";
  fs::remove_all(dir);
  auto built = run("db build --k 6 --q 2 --n-max 70 --dir " + dir.string());
  CHECK(built.status == 0);

  auto q = run("db query 63 6 2 --dir " + dir.string());
  CHECK(q.status == 0);
  auto parsed = nlohmann::json::parse(q.out);
  CHECK(parsed["e_lower"] == 63);
  CHECK(parsed["d"] == 32);

  auto missing = run("db query 500 6 2 --dir " + dir.string());
  CHECK(missing.status == 3);
  fs::remove_all(dir);
}

TEST_CASE("frame error rate command") {
  auto r = run("afer 7 3 4 7 10");
  CHECK(r.status == 0);
  double val = std::stod(r.out);
  CHECK(val > 0);
  CHECK(val < 1e-7);
}

TEST_CASE("usage errors") {
  CHECK(run("bound 7").status != 0);
  CHECK(run("nonsense").status != 0);
}
