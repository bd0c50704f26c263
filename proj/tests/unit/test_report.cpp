#include <doctest.h>

#include <sstream>

#include "crossint/report.hpp"

using namespace crossint;
using namespace crossint::report;

TEST_CASE("ranges") {
  CHECK(parse_range("6..9").lo == 6);
  CHECK(parse_range("6..9").hi == 9);
  CHECK(parse_range("7").lo == 7);
  CHECK(parse_range("7").hi == 7);
  CHECK_THROWS_AS(parse_range("9..6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("6..x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("6.."), std::invalid_argument);
}

TEST_CASE("grid expressions") {
  const Point env{{"a", 4}, {"b", 2}, {"t", 3}};
  CHECK(eval_expr("a+b", env) == 6);
  CHECK(eval_expr("b+t-1", env) == 4);
  CHECK(eval_expr("t*b", env) == 6);
  CHECK(eval_expr("max(a+b, t*b)", env) == 6);
  CHECK(eval_expr("min(a, t) * (b + 1)", env) == 9);
  CHECK(eval_expr("-2+a", env) == 2);
  CHECK_THROWS_AS(eval_expr("a+", env), std::invalid_argument);
  CHECK_THROWS_AS(eval_expr("k", env), std::invalid_argument);
  CHECK_THROWS_AS(eval_expr("a b", env), std::invalid_argument);
}

TEST_CASE("grid expansion is nested-loop order") {
  const auto grid = nlohmann::json::parse(R"({"vars": [["b", 1, 2], ["a", "b+1", "b+2"]]})");
  const auto pts = expand_grid(grid);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Point{{"b", 1}, {"a", 2}});
  CHECK(pts[1] == Point{{"b", 1}, {"a", 3}});
  CHECK(pts[2] == Point{{"b", 2}, {"a", 3}});
  CHECK(pts[3] == Point{{"b", 2}, {"a", 4}});
  // empty inner range
  CHECK(expand_grid(nlohmann::json::parse(R"({"vars": [["x", 1, 2], ["y", "x+1", 2]]})")).size() == 1);
}

TEST_CASE("shipped grid file") {
  const auto file = load_grid_file(default_grid_path());
  for (const auto& name : check_names()) {
    CAPTURE(name);
    const auto pts = grid_points(file, name, "default");
    CHECK_FALSE(pts.empty());
  }
  CHECK_THROWS_AS(grid_points(file, "nope", "default"), std::invalid_argument);
  CHECK_THROWS_AS(grid_points(file, "icip1", "nope"), std::invalid_argument);
  CHECK_FALSE(grid_points(file, "icip1", "literal").empty());
}

TEST_CASE("sweeps keep input order and flag bad points") {
  std::vector<Point> pts;
  for (int n = 9; n >= 6; --n) pts.push_back({{"n", n}, {"a", 4}, {"b", 2}, {"t", 2}});
  pts.push_back({{"n", 3}, {"a", 4}, {"b", 2}, {"t", 2}});  // n < tb
  const auto serial = sweep("icip1", pts, 1);
  const auto par = sweep("icip1", pts, 3);
  REQUIRE(serial.size() == pts.size());
  std::ostringstream x, y;
  write_tsv(x, serial);
  write_tsv(y, par);
  CHECK(x.str() == y.str());
  CHECK(x.str().rfind("check\tparams\tlhs\trhs\tslack\tequality_predicted\tequality_observed\tstatus\n", 0) == 0);
  for (std::size_t i = 0; i + 1 < serial.size(); ++i) CHECK(serial[i].pass());
  CHECK_FALSE(serial.back().pass());
  CHECK(serial[0].params.find("n=9") != std::string::npos);
  CHECK(serial[3].params.find("n=6") != std::string::npos);
  CHECK(serial[3].equality_observed);
  CHECK_THROWS_AS(sweep("nope", pts), std::invalid_argument);
  CHECK(to_json(serial).size() == pts.size());
}

TEST_CASE("search json") {
  const ConstraintSpec sp{TauConstraint::at_least(1), TauConstraint::at_least(2), false};
  SearchOptions one;
  one.threads = 1;
  SearchOptions many;
  many.threads = 4;
  const SearchReport r = max_cross_sum(7, 4, 2, sp, one);
  const auto j = to_json(r, false);
  CHECK(j.at("optimum") == 27);
  CHECK(j.at("bound") == 27);
  CHECK(j.at("bound_source") == "bound_1t");
  CHECK(j.at("bound_matched") == true);
  CHECK(j.at("iso_class_count") == 1);
  CHECK(j.at("iso_matches_construction") == true);
  CHECK(j.at("constraints").at("g") == ">=2");
  CHECK_FALSE(j.contains("nodes"));
  CHECK(to_json(r, true).contains("nodes"));
  CHECK(to_json(max_cross_sum(7, 4, 2, sp, many), false).dump() == j.dump());
  CHECK(str(binomial(100, 50)) == "100891344545564193334812497256");
}

TEST_CASE("theorem tables") {
  TableRequest req;
  req.theorem = "1t";
  req.n = {6, 7};
  req.a = {4, 4};
  req.b = {2, 2};
  req.t = {1, 3};
  const auto rows = run_table(req);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.t);
    CHECK(r.status == "PASS");
    CHECK(r.optimum == r.bound);
  }
  CHECK(rows[3].optimum == BigCount(31));
  CHECK(rows[4].optimum == BigCount(27));
  CHECK(rows[5].optimum == BigCount(23));
  CHECK(rows[3].iso_unique == true);
  CHECK_FALSE(rows[0].iso_unique.has_value());

  req.n = {8, 8};
  req.t = {2, 2};
  const auto big = run_table(req);
  REQUIRE(big.size() == 1);
  CHECK(big[0].status == "SKIP");
  CHECK(big[0].note.find("--force") != std::string::npos);

  req.theorem = "bogus";
  CHECK_THROWS_AS(run_table(req), std::invalid_argument);
}
