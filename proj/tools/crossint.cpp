// crossint: command-line front end. Every subcommand is a thin shell over the
// library; exit 0 = success / all checks pass, 1 = a check failed,
// 2 = bad input or guardrail.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crossint/constructions.hpp"
#include "crossint/exact_count.hpp"
#include "crossint/family_io.hpp"
#include "crossint/report.hpp"
#include "crossint/search.hpp"
#include "crossint/shifting.hpp"
#include "crossint/transversal.hpp"

using namespace crossint;

namespace {

struct Args {
  int n = 0, a = 0, b = 0, k = 0;
  int t = 1, s = 1, i = 1;
  std::string family, partner, which, grid = "default", grid_file, format, out, formula, theorem;
  std::string n_range, a_range, b_range, t_range, s_range;
  bool force = false, f_exact = false, g_exact = false, initial = false, intersecting = false;
  bool maximal = false, no_anchor = false, no_timing = false;
  int threads = 0;
  int stop_tau_g = 0;
  std::size_t witness_cap = 64;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string part_header(const std::string& tag, const Params& p, const char* part) {
  std::ostringstream h;
  h << "tag=" << tag << " params=n=" << p.n << ",a=" << p.a;
  if (p.b) h << ",b=" << p.b;
  if (p.t) h << ",t=" << *p.t;
  if (p.s) h << ",s=" << *p.s;
  if (p.i) h << ",i=" << *p.i;
  if (part) h << " part=" << part;
  return h.str();
}

int tau_or_zero(const Family& f) { return f.empty() ? 0 : tau(f); }

int cmd_construct(const Args& x) {
  const Tag tag = parse_tag(x.family);
  Params p;
  p.n = x.n;
  p.a = x.k ? x.k : x.a;
  p.b = x.b;
  switch (tag) {
    case Tag::Star: p.i = x.i; break;
    case Tag::Mt: case Tag::Ht: p.t = x.t; break;
    case Tag::Mst: case Tag::Hst: p.t = x.t; p.s = x.s; break;
    default: break;
  }
  const NamedFamily nf = build(tag, p);
  const std::string name = tag_name(tag);
  std::string prefix = x.out;
  if (prefix.empty()) {
    prefix = name + "_n" + std::to_string(p.n) + (p.b ? "_a" : "_k") + std::to_string(p.a);
    if (p.b) prefix += "_b" + std::to_string(p.b);
    if (p.t) prefix += "_t" + std::to_string(*p.t);
    if (p.s) prefix += "_s" + std::to_string(*p.s);
    if (p.i) prefix += "_i" + std::to_string(*p.i);
  }
  if (const auto* f = std::get_if<Family>(&nf.realized)) {
    save_family(prefix + ".fam", *f, {part_header(name, p, nullptr)});
    std::cout << "size=" << f->size() << " tau=" << tau_or_zero(*f) << "\n";
    std::cout << "wrote " << prefix << ".fam\n";
    return 0;
  }
  const auto& pair = std::get<CrossPair>(nf.realized);
  save_family(prefix + ".F.fam", pair.f, {part_header(name, p, "F")});
  save_family(prefix + ".G.fam", pair.g, {part_header(name, p, "G")});
  std::cout << "total=" << pair.total() << " tau_G=" << tau_or_zero(pair.g) << " size_F=" << pair.f.size()
            << " size_G=" << pair.g.size() << " tau_F=" << tau_or_zero(pair.f) << "\n";
  std::cout << "wrote " << prefix << ".F.fam " << prefix << ".G.fam\n";
  return 0;
}

int cmd_tau(const Args& x) {
  const Family f = load_family(x.family);
  const TauResult r = tau_detailed(f);
  std::cout << "tau=" << r.tau << " cover=" << r.witness.cover.to_string() << " members=" << f.size() << "\n";
  return 0;
}

int cmd_shift(const Args& x) {
  const Family f = load_family(x.family);
  if (x.partner.empty()) {
    const CompressResult r = compress_to_initial(f);
    std::cout << "shifts=" << r.log.size() << " initial=" << (is_initial(r.family) ? "yes" : "no") << "\n";
    Sink sink(x.out);
    write_family(sink.os(), r.family, {"compressed by crossint shift"});
    return 0;
  }
  const Family g = load_family(x.partner);
  if (!f.uniformity() || !g.uniformity()) throw std::invalid_argument("shift pair: both families must be uniform");
  const CrossPair pair(f.n(), *f.uniformity(), *g.uniformity(), f, g);
  PairStop stop;
  if (x.stop_tau_g > 0) stop = [t = x.stop_tau_g](const CrossPair& p) { return tau_or_zero(p.g) == t; };
  const PairCompressResult r = compress_pair(pair, stop);
  std::cout << "shifts=" << r.log.size() << " stopped_early=" << (r.stopped_early ? "yes" : "no")
            << " tau_F=" << tau_or_zero(r.pair.f) << " tau_G=" << tau_or_zero(r.pair.g) << "\n";
  const std::string prefix = x.out.empty() ? "shifted" : x.out;
  save_family(prefix + ".F.fam", r.pair.f, {"part=F"});
  save_family(prefix + ".G.fam", r.pair.g, {"part=G"});
  std::cout << "wrote " << prefix << ".F.fam " << prefix << ".G.fam\n";
  return 0;
}

int cmd_count(const Args& x) {
  const std::string& f = x.formula;
  BigCount v;
  if (f == "binomial") v = binomial(x.n, x.k);
  else if (f == "Mt") v = size_mt(x.n, x.a, x.b, x.t);
  else if (f == "Mt_partition") v = size_mt_partition(x.n, x.a, x.b, x.t);
  else if (f == "Mt_alternating") v = size_mt_alternating(x.n, x.a, x.b, x.t);
  else if (f == "Ht") v = size_ht(x.n, x.a, x.b, x.t);
  else if (f == "Hst") v = size_hst(x.n, x.a, x.b, x.t, x.s);
  else if (f == "Hst_printed") v = size_hst_printed(x.n, x.a, x.b, x.t, x.s);
  else if (f == "1t") v = bound_1t(x.n, x.a, x.b, x.t);
  else if (f == "st" || f == "Mst") v = bound_st(x.n, x.a, x.b, x.t, x.s);
  else if (f == "small_a") v = bound_small_a(x.n, x.a, x.b);
  else if (f == "m1") v = m1(x.n, x.k);
  else if (f == "m2") v = m2(x.n, x.k);
  else if (f == "cover3") v = bound_cover3(x.n, x.k);
  else if (f == "el") {
    const auto [lo, hi] = erdos_lovasz(x.k);
    std::cout << "lower=" << lo << " upper=" << hi << "\n";
    return 0;
  } else if (f == "fot") {
    // Lower bounds for m(n,k,k) side by side, k = 1..K.
    std::cout << "k\terdos_lovasz\tfot\tfot_exceeds\n";
    for (int k = 1; k <= x.k; ++k) {
      const BigCount el = erdos_lovasz(k).first, fot = fot_lower(k);
      std::cout << k << '\t' << el << '\t' << fot << '\t' << (fot > el ? "yes" : "no") << '\n';
    }
    return 0;
  } else {
    throw std::invalid_argument("unknown formula '" + f + "'");
  }
  std::cout << v << "\n";
  return 0;
}

int cmd_verify_identity(const Args& x) {
  const nlohmann::json file = report::load_grid_file(x.grid_file.empty() ? report::default_grid_path() : x.grid_file);
  std::vector<std::string> checks;
  if (x.which == "all") {
    for (const auto& c : report::check_names())
      if (file.at("checks").contains(c) && file.at("checks").at(c).contains(x.grid)) checks.push_back(c);
  } else {
    checks.push_back(x.which);
  }
  std::vector<SlackReport> rows;
  for (const auto& c : checks) {
    auto part = report::sweep(c, report::grid_points(file, c, x.grid), x.threads);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  Sink sink(x.out);
  if (x.format == "json") sink.os() << report::to_json(rows).dump(2) << "\n";
  else report::write_tsv(sink.os(), rows);
  const auto fails = std::count_if(rows.begin(), rows.end(), [](const SlackReport& r) { return !r.pass(); });
  std::cerr << rows.size() << " rows, " << fails << " FAIL\n";
  return fails ? 1 : 0;
}

SearchOptions search_options(const Args& x) {
  SearchOptions o;
  o.threads = x.threads;
  o.force = x.force;
  o.witness_cap = x.witness_cap;
  o.anchor = !x.no_anchor;
  return o;
}

int cmd_search(const Args& x) {
  const SearchOptions opt = search_options(x);
  Sink sink(x.out);
  if (x.maximal) {
    const MaximalPairs m = enumerate_maximal_pairs(x.n, x.a, x.b, opt);
    nlohmann::json j;
    j["params"] = {{"n", x.n}, {"a", x.a}, {"b", x.b}};
    j["labelled"] = m.labelled;
    j["iso_class_count"] = m.classes.size();
    nlohmann::json cls = nlohmann::json::array();
    for (std::size_t i = 0; i < m.classes.size(); ++i)
      cls.push_back({{"form", m.forms[i].to_string()},
                     {"F", format_family(m.classes[i].f)},
                     {"G", format_family(m.classes[i].g)}});
    j["classes"] = cls;
    sink.os() << j.dump(2) << "\n";
    return 0;
  }
  SearchReport r;
  if (x.intersecting) {
    r = max_intersecting_with_tau(x.n, x.k ? x.k : x.a, x.s, opt);
  } else {
    ConstraintSpec spec;
    spec.f = x.f_exact ? TauConstraint::exactly(x.s) : TauConstraint::at_least(x.s);
    spec.g = x.g_exact ? TauConstraint::exactly(x.t) : TauConstraint::at_least(x.t);
    spec.initial_only = x.initial;
    r = max_cross_sum(x.n, x.a, x.b, spec, opt);
  }
  if (x.format == "text") {
    sink.os() << "optimum=" << (r.optimum ? r.optimum->str() : "none")
              << " bound=" << (r.bound ? r.bound->str() : "-") << " classes=" << r.iso_class_count
              << " iso_matches=" << (r.iso_matches_construction ? (*r.iso_matches_construction ? "yes" : "no") : "-")
              << "\n";
  } else {
    sink.os() << report::to_json(r, !x.no_timing).dump(2) << "\n";
  }
  const bool bad = (r.bound && !r.bound_matched && !x.intersecting) ||
                   (x.intersecting && r.bound && r.optimum != r.bound) ||
                   (r.iso_matches_construction && !*r.iso_matches_construction);
  return bad ? 1 : 0;
}

int cmd_table(const Args& x) {
  report::TableRequest req;
  req.theorem = x.theorem;
  auto range = [](const std::string& text, int fallback) {
    return text.empty() ? report::Range{fallback, fallback} : report::parse_range(text);
  };
  req.n = range(x.n_range, x.n);
  req.a = range(x.a_range, x.k ? x.k : x.a);
  req.b = range(x.b_range, x.b);
  req.t = range(x.t_range, x.t);
  req.s = range(x.s_range, x.s);
  req.search = search_options(x);
  const auto rows = report::run_table(req);
  Sink sink(x.out);
  if (x.format == "json") sink.os() << report::to_json(rows).dump(2) << "\n";
  else if (x.format == "tsv") report::write_table_tsv(sink.os(), rows);
  else report::write_table_text(sink.os(), rows);
  int fails = 0, guarded = 0;
  for (const auto& r : rows) {
    if (r.status == "FAIL") ++fails;
    if (r.status == "SKIP" && r.note.rfind("instance too large", 0) == 0) ++guarded;
  }
  std::cerr << rows.size() << " rows, " << fails << " FAIL, " << guarded << " over guardrail\n";
  if (fails) return 1;
  return guarded ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossint: cross-intersecting families under covering constraints"};
  app.require_subcommand(1);
  Args x;

  auto add_params = [&](CLI::App* c) {
    c->add_option("--n", x.n, "ground set size");
    c->add_option("--a", x.a, "uniformity of F");
    c->add_option("--b", x.b, "uniformity of G");
    c->add_option("--k", x.k, "uniformity (single families)");
    c->add_option("--t", x.t, "covering target for G");
    c->add_option("--s", x.s, "covering target for F");
  };

  auto* construct = app.add_subcommand("construct", "build a named family and write it");
  add_params(construct);
  construct->add_option("--family", x.family, "star|HM|triangle|G|Mt|Mst|Ht|Hst|complete")->required();
  construct->add_option("--i", x.i, "star centre");
  construct->add_option("--out", x.out, "output prefix");

  auto* tau_cmd = app.add_subcommand("tau", "covering number of a family file");
  tau_cmd->add_option("--family", x.family, "family file")->required();

  auto* shift = app.add_subcommand("shift", "left-compress a family (or a pair with --with)");
  shift->add_option("--family", x.family, "family file")->required();
  shift->add_option("--with", x.partner, "second family; shifts the pair simultaneously");
  shift->add_option("--stop-tau-g", x.stop_tau_g, "stop once tau of the second family equals this");
  shift->add_option("--out", x.out, "output file (single) or prefix (pair)");

  auto* count = app.add_subcommand("count", "evaluate a closed form exactly");
  add_params(count);
  count->add_option("--formula", x.formula,
                    "binomial|Mt|Mt_partition|Mt_alternating|Ht|Hst|Hst_printed|1t|st|small_a|m1|m2|cover3|el|fot")
      ->required();

  auto* verify = app.add_subcommand("verify-identity", "sweep an identity or inequality over a grid");
  verify->add_option("--which", x.which, "identity|cnie|qlecnie2|snsi|icip1|icile|all")->required();
  verify->add_option("--grid", x.grid, "grid name in the grid file (default, literal)");
  verify->add_option("--grid-file", x.grid_file, "grid file (defaults to config/grids.json)");
  verify->add_option("--format", x.format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));
  verify->add_option("--out", x.out, "output file");
  verify->add_option("--threads", x.threads, "worker threads (0: OpenMP default)");

  auto* search = app.add_subcommand("search", "exhaustive maximum of |F|+|G|");
  add_params(search);
  search->add_flag("--f-exact", x.f_exact, "tau(F) = s instead of >= s");
  search->add_flag("--g-exact", x.g_exact, "tau(G) = t instead of >= t");
  search->add_flag("--initial", x.initial, "initial (left-shifted) families only");
  search->add_flag("--intersecting", x.intersecting, "m(n,k,s) instead of a cross pair");
  search->add_flag("--maximal", x.maximal, "list maximal pairs up to isomorphism");
  search->add_flag("--force", x.force, "ignore the instance-size guardrails");
  search->add_flag("--no-anchor", x.no_anchor, "do not fix [b] in G");
  search->add_flag("--no-timing", x.no_timing, "omit nodes and elapsed_ms");
  search->add_option("--witness-cap", x.witness_cap, "witnesses kept");
  search->add_option("--threads", x.threads, "worker threads (0: OpenMP default)");
  search->add_option("--format", x.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  search->add_option("--out", x.out, "output file");

  auto* table = app.add_subcommand("table", "theorem bound vs oracle over a grid");
  table->add_option("--theorem", x.theorem, "1t|st|cor9|ht|hst|small_a|m")->required();
  table->add_option("--n", x.n_range, "range, e.g. 6..9")->required();
  table->add_option("--a,--k", x.a_range, "range")->required();
  table->add_option("--b", x.b_range, "range");
  table->add_option("--t", x.t_range, "range");
  table->add_option("--s", x.s_range, "range");
  table->add_flag("--force", x.force, "ignore the instance-size guardrails");
  table->add_option("--threads", x.threads, "worker threads (0: OpenMP default)");
  table->add_option("--format", x.format, "text|tsv|json")->check(CLI::IsMember({"text", "tsv", "json"}));
  table->add_option("--out", x.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(x);
    if (tau_cmd->parsed()) return cmd_tau(x);
    if (shift->parsed()) return cmd_shift(x);
    if (count->parsed()) return cmd_count(x);
    if (verify->parsed()) return cmd_verify_identity(x);
    if (search->parsed()) return cmd_search(x);
    if (table->parsed()) return cmd_table(x);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
