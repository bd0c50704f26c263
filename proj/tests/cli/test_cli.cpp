#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the binary inside a scratch directory; stderr goes to /dev/null.
Run run(const std::string& args, const fs::path& dir) {
  const std::string cmd = "cd '" + dir.string() + "' && '" CROSSINT_BIN "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("crossint_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("construct") {
  const auto d = scratch("construct");
  Run r = run("construct --family Mt --n 7 --a 4 --b 2 --t 2", d);
  CHECK(r.code == 0);
  CHECK(r.out.find("total=27 tau_G=2") != std::string::npos);
  REQUIRE(fs::exists(d / "Mt_n7_a4_b2_t2.F.fam"));
  const std::string g = slurp(d / "Mt_n7_a4_b2_t2.G.fam");
  CHECK(g == "# tag=Mt params=n=7,a=4,b=2,t=2 part=G\nn=7\nk=2\n1,2\n3,4\n");

  r = run("construct --family Ht --n 7 --a 4 --b 2 --t 2", d);
  CHECK(r.code == 0);
  CHECK(r.out.find("total=25") != std::string::npos);

  r = run("construct --family star --n 5 --k 2 --i 1 --out star", d);
  CHECK(r.code == 0);
  CHECK(r.out.find("size=4") != std::string::npos);
  CHECK(fs::exists(d / "star.fam"));

  CHECK(run("construct --family Mt --n 3 --a 4 --b 2 --t 2", d).code == 2);
  CHECK(run("construct --family nope --n 7 --a 4", d).code == 2);
}

TEST_CASE("tau and shift") {
  const auto d = scratch("tau");
  REQUIRE(run("construct --family Mt --n 7 --a 4 --b 2 --t 3 --out m", d).code == 0);
  Run r = run("tau --family m.G.fam", d);
  CHECK(r.code == 0);
  CHECK(r.out.find("tau=3") != std::string::npos);
  r = run("shift --family m.G.fam --with m.F.fam --out s", d);
  CHECK(r.code == 0);
  CHECK(fs::exists(d / "s.F.fam"));
  CHECK(run("tau --family missing.fam", d).code == 2);
  {
    std::ofstream bad(d / "bad.fam");
    bad << "n=3\n1,4\n";
  }
  CHECK(run("tau --family bad.fam", d).code == 2);
}

TEST_CASE("count") {
  const auto d = scratch("count");
  Run r = run("count --formula Mt --n 40 --a 10 --b 3 --t 10", d);
  CHECK(r.code == 0);
  CHECK(r.out == "59059\n");
  CHECK(run("count --formula binomial --n 40 --k 3", d).out == "9880\n");
  CHECK(run("count --formula nope --n 4", d).code == 2);
}

TEST_CASE("verify-identity") {
  const auto d = scratch("verify");
  Run r = run("verify-identity --which icip1 --grid default", d);
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "check\tparams\tlhs\trhs\tslack\tequality_predicted\tequality_observed\tstatus");
  int count = 0;
  while (std::getline(rows, line)) {
    ++count;
    CHECK(line.substr(line.rfind('\t') + 1) == "PASS");
  }
  CHECK(count > 50);
  // thread count does not change the bytes
  CHECK(run("verify-identity --which all --threads 1", d).out == run("verify-identity --which all --threads 3", d).out);
  CHECK(run("verify-identity --which icile --grid literal", d).code == 1);
  CHECK(run("verify-identity --which nope", d).code != 0);
}

TEST_CASE("search") {
  const auto d = scratch("search");
  Run r = run("search --n 7 --a 4 --b 2 --s 1 --t 2 --no-timing", d);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("optimum") == 27);
  CHECK(j.at("iso_class_count") == 1);
  CHECK(run("search --n 7 --a 4 --b 2 --s 1 --t 2 --no-timing --threads 1", d).out ==
        run("search --n 7 --a 4 --b 2 --s 1 --t 2 --no-timing --threads 3", d).out);
  CHECK(run("search --n 8 --a 4 --b 2 --s 1 --t 2", d).code == 2);
  r = run("search --intersecting --n 7 --k 3 --s 2 --no-timing", d);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("optimum") == 13);
}

TEST_CASE("table") {
  const auto d = scratch("table");
  Run r = run("table --theorem 1t --n 6..7 --a 4 --b 2 --t 1..3 --format tsv", d);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("SKIP") == std::string::npos);
  r = run("table --theorem 1t --n 6..9 --a 4 --b 2 --t 1..3", d);
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("table --theorem nope --n 6 --a 4", d).code == 2);
}
