#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossint/exact_count.hpp"
#include "crossint/search.hpp"

namespace crossint::report {

std::string str(const BigCount& v);

// ---- search JSON -----------------------------------------------------------

/// Search report as JSON. nodes and elapsed_ms depend on scheduling; pass
/// timing = false for byte-stable output.
nlohmann::json to_json(const SearchReport& r, bool timing = true);

// ---- grids -----------------------------------------------------------------

using Point = std::map<std::string, int>;

/// Integer range "6..9" or "7".
struct Range {
  int lo = 0, hi = 0;
};
Range parse_range(const std::string& text);

/// Evaluates a bound expression over already-bound variables: integers,
/// names, + - *, parentheses, min(x,y), max(x,y).
int eval_expr(const std::string& expr, const Point& env);

/// Expands {"vars": [["t", 2, 4], ["a", "b+t-1", "b+t+2"], ...]}; later
/// variables may refer to earlier ones. Order is nested-loop order.
std::vector<Point> expand_grid(const nlohmann::json& grid);

/// Versioned grid file shipped with the repo (config/grids.json).
std::string default_grid_path();
nlohmann::json load_grid_file(const std::string& path);
/// Points of one check under a named grid ("default", "literal").
std::vector<Point> grid_points(const nlohmann::json& file, const std::string& check,
                               const std::string& grid);

// ---- identity sweeps ---------------------------------------------------------

/// Names accepted by run_check / sweep.
const std::vector<std::string>& check_names();

SlackReport run_check(const std::string& which, const Point& p);

/// Evaluates every point in parallel; output order is the input order.
/// Points outside a check's hypotheses come back as failing rows.
std::vector<SlackReport> sweep(const std::string& which, const std::vector<Point>& points,
                               int threads = 0);

void write_tsv(std::ostream& out, const std::vector<SlackReport>& rows);
nlohmann::json to_json(const std::vector<SlackReport>& rows);

// ---- theorem tables ------------------------------------------------------------

struct TableRow {
  std::string theorem;
  int n = 0, a = 0, b = 0, t = 0, s = 0;
  std::optional<BigCount> bound;
  std::string bound_source;
  std::optional<BigCount> optimum;
  std::string note;                     // why the oracle or bound is absent
  std::optional<bool> iso_unique;       // only asserted for n > a+b
  std::string status;                   // PASS, FAIL, SKIP
};

struct TableRequest {
  std::string theorem;  // 1t, st, cor9, ht, hst, small_a, m
  Range n, a, b, t{1, 1}, s{1, 1};
  SearchOptions search;
};

/// Theorem names understood by run_table.
const std::vector<std::string>& table_theorems();

/// One row per grid point. Rows whose hypotheses fail or that exceed the
/// guardrails are SKIP; FAIL means oracle and formula disagree.
std::vector<TableRow> run_table(const TableRequest& req);

void write_table_text(std::ostream& out, const std::vector<TableRow>& rows);
void write_table_tsv(std::ostream& out, const std::vector<TableRow>& rows);
nlohmann::json to_json(const std::vector<TableRow>& rows);

}  // namespace crossint::report
