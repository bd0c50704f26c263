#include "crossint/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include "crossint/constructions.hpp"
#include "crossint/transversal.hpp"
#include "search_internal.hpp"

namespace crossint {
namespace {

using detail::Candidate;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void atomic_max(std::atomic<long>& target, long v) {
  long cur = target.load(std::memory_order_relaxed);
  while (v > cur && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// Enumerated universes: b-sets in lex order (the DFS order), a-sets sorted by
// mask so that extracted subfamilies are already in branching order.
struct Space {
  int n = 0, a = 0, b = 0;
  std::vector<std::uint64_t> bsets, asets;
  int nb = 0, na = 0, wa = 0;
  std::vector<std::uint64_t> meet;     // nb rows of wa words: a-sets meeting bsets[j]
  std::vector<std::vector<int>> preds; // immediate shifting predecessors of bsets[j]

  Space(int n_, int a_, int b_) : n(n_), a(a_), b(b_) {
    for (SetWord s : ksubsets_lex(n, b)) bsets.push_back(s.bits());
    for (SetWord s : ksubsets_lex(n, a)) asets.push_back(s.bits());
    std::sort(asets.begin(), asets.end());
    nb = static_cast<int>(bsets.size());
    na = static_cast<int>(asets.size());
    wa = (na + 63) / 64;
    meet.assign(static_cast<std::size_t>(nb) * wa, 0);
    for (int j = 0; j < nb; ++j)
      for (int i = 0; i < na; ++i)
        if (asets[i] & bsets[j]) meet[j * wa + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void build_preds() {
    preds.assign(nb, {});
    for (int j = 0; j < nb; ++j) {
      const std::uint64_t m = bsets[j];
      for (int x = 2; x <= n; ++x) {
        const std::uint64_t hi = std::uint64_t{1} << (x - 1), lo = hi >> 1;
        if (!(m & hi) || (m & lo)) continue;
        const std::uint64_t p = (m & ~hi) | lo;
        const auto it = std::find(bsets.begin(), bsets.end(), p);
        preds[j].push_back(static_cast<int>(it - bsets.begin()));
      }
    }
  }

  const std::uint64_t* meet_row(int j) const { return meet.data() + static_cast<std::size_t>(j) * wa; }

  void extract(const std::uint64_t* bits, std::vector<std::uint64_t>& out) const {
    out.clear();
    for (int w = 0; w < wa; ++w)
      for (std::uint64_t x = bits[w]; x; x &= x - 1) out.push_back(asets[w * 64 + std::countr_zero(x)]);
  }
};

struct Task {
  int depth = 0;
  std::vector<int> chosen;
  std::vector<std::uint64_t> d;
};

struct TaskResult {
  long best = -1;
  std::vector<Candidate> records;
  bool overflow = false;
  std::uint64_t nodes = 0;
};

// One DFS worker. Include/exclude over bsets; level(d) holds D_a of the
// chosen b-sets, restricted to nothing else.
class CrossWorker {
 public:
  CrossWorker(const Space& sp, const ConstraintSpec& spec, bool anchor, std::atomic<long>& best,
              std::size_t record_cap)
      : sp_(sp), spec_(spec), anchor_(anchor), shared_best_(best), record_cap_(record_cap),
        levels_(static_cast<std::size_t>(sp.nb + 1) * sp.wa) {
    // T-slices for Exactly(s): a-sets meeting each s-subset of [n].
    const int s = spec_.f.value;
    if (spec_.f.kind == TauConstraint::Kind::Exactly && s >= 1) {
      auto add_slice = [&](std::uint64_t t) {
        std::vector<std::uint64_t> row(sp_.wa, 0);
        for (int i = 0; i < sp_.na; ++i)
          if (sp_.asets[i] & t) row[i / 64] |= std::uint64_t{1} << (i % 64);
        slices_.push_back(std::move(row));
      };
      // An initial family with tau <= s is covered by [s].
      if (spec_.initial_only) add_slice(SetWord::interval(1, s).bits());
      else for_each_ksubset(sp_.n, s, [&](SetWord t) { add_slice(t.bits()); });
    }
  }

  // Whole-space root: returns false when no pair can satisfy the spec.
  bool seed_root() {
    std::uint64_t* root = level(0);
    std::fill(root, root + sp_.wa, 0);
    for (int i = 0; i < sp_.na; ++i) root[i / 64] |= std::uint64_t{1} << (i % 64);
    chosen_.clear();
    return f_feasible(root) && g_universe_ok(0);
  }

  void collect(int depth, std::vector<Task>& out) {
    collect_depth_ = depth;
    tasks_ = &out;
    dfs(0);
    tasks_ = nullptr;
  }

  void run(const Task& task, TaskResult& result) {
    result_ = &result;
    chosen_ = task.chosen;
    std::copy(task.d.begin(), task.d.end(), level(task.depth));
    dfs(task.depth);
    result_ = nullptr;
  }

 private:
  std::uint64_t* level(int d) { return levels_.data() + static_cast<std::size_t>(d) * sp_.wa; }

  bool f_feasible(const std::uint64_t* d) {
    const int s = spec_.f.value;
    if (s <= 0) return true;
    if (s == 1) return detail::popcount_words(d, sp_.wa) > 0;
    sp_.extract(d, scratch_);
    return !kernel::cover_within_sorted(scratch_, s - 1);
  }

  void gather_g(int from) {
    gbuf_.clear();
    for (int j : chosen_) gbuf_.push_back(sp_.bsets[j]);
    for (int j = from; j < sp_.nb; ++j) gbuf_.push_back(sp_.bsets[j]);
    kernel::sort_for_branching(gbuf_);
  }

  // tau of every b-set still available must reach t.
  bool g_universe_ok(int from) {
    const int t = spec_.g.value;
    if (t <= 0) return true;
    gather_g(from);
    if (t == 1) return !gbuf_.empty();
    return !kernel::cover_within_sorted(gbuf_, t - 1);
  }

  bool g_include_ok() {
    if (spec_.g.kind != TauConstraint::Kind::Exactly) return true;
    gather_g(sp_.nb);
    return kernel::cover_within_sorted(gbuf_, spec_.g.value);
  }

  bool includable(int j) const {
    if (!spec_.initial_only) return true;
    for (int p : sp_.preds[j])
      if (std::find(chosen_.begin(), chosen_.end(), p) == chosen_.end()) return false;
    return true;
  }

  void dfs(int d) {
    if (result_) ++result_->nodes;
    const std::uint64_t* cur = level(d);
    const long ub = static_cast<long>(chosen_.size()) + (sp_.nb - d) + detail::popcount_words(cur, sp_.wa);
    if (ub < shared_best_.load(std::memory_order_relaxed)) return;
    if (tasks_ && d == collect_depth_) {
      tasks_->push_back({d, chosen_, std::vector<std::uint64_t>(cur, cur + sp_.wa)});
      return;
    }
    if (d == sp_.nb) {
      leaf();
      return;
    }
    if (includable(d)) {
      std::uint64_t* next = level(d + 1);
      const std::uint64_t* row = sp_.meet_row(d);
      for (int w = 0; w < sp_.wa; ++w) next[w] = cur[w] & row[w];
      chosen_.push_back(d);
      if (f_feasible(next) && g_include_ok()) dfs(d + 1);
      chosen_.pop_back();
    }
    if (anchor_ && d == 0) return;
    std::copy(cur, cur + sp_.wa, level(d + 1));
    if (g_universe_ok(d + 1)) dfs(d + 1);
  }

  void leaf() {
    gather_g(sp_.nb);
    const int tg = gbuf_.empty() ? 0 : kernel::tau_sorted(gbuf_).tau;
    if (!spec_.g.admits(tg)) return;
    const std::uint64_t* d = level(sp_.nb);
    const int s = spec_.f.value;
    const long g_size = static_cast<long>(chosen_.size());

    if (spec_.f.kind == TauConstraint::Kind::AtLeast) {
      if (!f_feasible(d)) return;
      record(g_size + detail::popcount_words(d, sp_.wa), d);
      return;
    }
    sp_.extract(d, scratch_);
    const int td = scratch_.empty() ? 0 : kernel::tau_sorted(scratch_).tau;
    if (td < s) return;
    if (td == s) {
      record(g_size + static_cast<long>(scratch_.size()), d);
      return;
    }
    if (s == 0) {
      const std::vector<std::uint64_t> none(sp_.wa, 0);
      record(g_size, none.data());
      return;
    }
    // tau(D) > s: the best F is the largest slice D & meets(T), |T| = s,
    // whose covering number is still s.
    std::vector<std::uint64_t> slice(sp_.wa);
    long best_slice = -1;
    std::vector<std::vector<std::uint64_t>> winners;
    for (const auto& row : slices_) {
      for (int w = 0; w < sp_.wa; ++w) slice[w] = d[w] & row[w];
      const long size = detail::popcount_words(slice.data(), sp_.wa);
      if (size < best_slice) continue;
      if (s > 0) {
        sp_.extract(slice.data(), scratch_);
        if (kernel::cover_within_sorted(scratch_, s - 1)) continue;
      }
      if (size > best_slice) {
        best_slice = size;
        winners.clear();
      }
      if (std::find(winners.begin(), winners.end(), slice) == winners.end()) winners.push_back(slice);
    }
    for (const auto& w : winners) record(g_size + best_slice, w.data());
  }

  void record(long value, const std::uint64_t* fbits) {
    if (value < shared_best_.load(std::memory_order_relaxed) || value < result_->best) return;
    if (value > result_->best) {
      result_->best = value;
      result_->records.clear();
      result_->overflow = false;
      atomic_max(shared_best_, value);
    }
    if (result_->records.size() >= record_cap_) {
      result_->overflow = true;
      return;
    }
    Candidate c;
    sp_.extract(fbits, c.f);
    for (int j : chosen_) c.g.push_back(sp_.bsets[j]);
    result_->records.push_back(std::move(c));
  }

  const Space& sp_;
  const ConstraintSpec& spec_;
  bool anchor_;
  std::atomic<long>& shared_best_;
  std::size_t record_cap_;
  std::vector<std::uint64_t> levels_;
  std::vector<int> chosen_;
  std::vector<std::uint64_t> scratch_, gbuf_;
  std::vector<std::vector<std::uint64_t>> slices_;
  int collect_depth_ = -1;
  std::vector<Task>* tasks_ = nullptr;
  TaskResult* result_ = nullptr;
};

// Merges per-task results in task order; only the global best survives.
long merge_results(std::vector<TaskResult>& results, std::vector<Candidate>& out, bool& overflow,
                   std::uint64_t& nodes) {
  long best = -1;
  for (const auto& r : results) {
    best = std::max(best, r.best);
    nodes += r.nodes;
  }
  for (auto& r : results) {
    if (r.best != best || best < 0) continue;
    overflow = overflow || r.overflow;
    for (auto& c : r.records) out.push_back(std::move(c));
  }
  return best;
}

void check_guard(bool ok, const SearchOptions& opt, const std::string& what) {
  if (!ok && !opt.force) throw std::invalid_argument("instance too large: " + what + " (use --force)");
}

std::vector<CanonicalForm> reference_forms_for(int n, const std::vector<CrossPair>& refs,
                                               const SearchOptions& opt) {
  std::vector<CanonicalForm> forms;
  const int max_n = opt.force ? 64 : opt.guard.max_canon_n;
  if (n > max_n) return forms;
  for (const auto& p : refs) forms.push_back(canonical_form(p, max_n));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

}  // namespace

SearchReport max_cross_sum(int n, int a, int b, const ConstraintSpec& spec,
                           const SearchOptions& opt) {
  const auto t0 = Clock::now();
  detail::check_constraints(n, a, b, spec);
  if (spec.initial_only)
    check_guard(n <= opt.guard.max_initial_n, opt, "initial_only needs n <= " +
                                                     std::to_string(opt.guard.max_initial_n));
  else
    check_guard(binomial(n, b) <= opt.guard.max_b_sets, opt,
                "C(n,b) > " + std::to_string(opt.guard.max_b_sets));
  check_guard(binomial(n, a) <= opt.guard.max_a_sets, opt,
              "C(n,a) > " + std::to_string(opt.guard.max_a_sets));

  SearchReport r;
  r.n = n;
  r.a = a;
  r.b = b;
  r.spec = spec;
  r.bound = theorem_bound(n, a, b, spec, &r.bound_source);

  Space sp(n, a, b);
  if (spec.initial_only) sp.build_preds();
  // Any nonempty G can be relabelled to contain [b]; initial G already does.
  const bool anchor = opt.anchor && !spec.initial_only && spec.g.value >= 1;

  std::atomic<long> best{-1};
  std::vector<Task> tasks;
  {
    CrossWorker seed(sp, spec, anchor, best, opt.record_cap);
    if (seed.seed_root()) seed.collect(std::min(sp.nb, std::max(0, opt.split_depth) + (anchor ? 1 : 0)), tasks);
  }

  std::vector<TaskResult> results(tasks.size());
  const long task_count = static_cast<long>(tasks.size());
#pragma omp parallel num_threads(detail::thread_count(opt))
  {
    CrossWorker worker(sp, spec, anchor, best, opt.record_cap);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < task_count; ++i) worker.run(tasks[i], results[i]);
  }

  std::vector<Candidate> optimal;
  bool overflow = false;
  const long opt_value = merge_results(results, optimal, overflow, r.nodes);
  if (opt_value >= 0) r.optimum = BigCount(opt_value);

  std::vector<CanonicalForm> ref_forms;
  if (auto ref = theorem_construction(n, a, b, spec, &r.reference)) {
    ref_forms = reference_forms_for(n, {*ref}, opt);
  }
  detail::finalize(r, optimal, opt, ref_forms);
  if (overflow) r.classes_complete = false;
  if (!r.classes_complete) r.iso_matches_construction.reset();
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Intersecting families with a covering constraint.

namespace {

struct IntersectSpace {
  int n = 0, k = 0, ns = 0, w = 0;
  std::vector<std::uint64_t> sets;  // k-sets sorted by mask
  std::vector<std::uint64_t> meet;  // ns rows of w words

  IntersectSpace(int n_, int k_) : n(n_), k(k_) {
    for (SetWord s : ksubsets_lex(n, k)) sets.push_back(s.bits());
    std::sort(sets.begin(), sets.end());
    ns = static_cast<int>(sets.size());
    w = (ns + 63) / 64;
    meet.assign(static_cast<std::size_t>(ns) * w, 0);
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j)
        if (sets[i] & sets[j]) meet[i * w + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  const std::uint64_t* row(int i) const { return meet.data() + static_cast<std::size_t>(i) * w; }
};

struct ITask {
  int depth = 0;
  std::vector<int> chosen;
  std::vector<std::uint64_t> compat;
};

// Include/exclude over the k-sets; compat holds the sets meeting every chosen one.
class IntersectWorker {
 public:
  IntersectWorker(const IntersectSpace& sp, int s, int anchor, std::atomic<long>& best,
                  std::size_t record_cap)
      : sp_(sp), s_(s), anchor_(anchor), shared_best_(best), record_cap_(record_cap),
        levels_(static_cast<std::size_t>(sp.ns + 1) * sp.w) {}

  void collect(int depth, std::vector<ITask>& out) {
    std::uint64_t* root = level(0);
    std::fill(root, root + sp_.w, 0);
    for (int i = 0; i < sp_.ns; ++i) root[i / 64] |= std::uint64_t{1} << (i % 64);
    collect_depth_ = depth;
    tasks_ = &out;
    chosen_.clear();
    if (universe_ok(0)) dfs(0);
    tasks_ = nullptr;
  }

  void run(const ITask& task, TaskResult& result) {
    result_ = &result;
    chosen_ = task.chosen;
    std::copy(task.compat.begin(), task.compat.end(), level(task.depth));
    dfs(task.depth);
    result_ = nullptr;
  }

 private:
  std::uint64_t* level(int d) { return levels_.data() + static_cast<std::size_t>(d) * sp_.w; }

  bool bit(const std::uint64_t* x, int i) const { return (x[i / 64] >> (i % 64)) & 1; }

  int remaining(const std::uint64_t* compat, int from) const {
    int c = 0;
    for (int i = from; i < sp_.ns; ++i) c += bit(compat, i);
    return c;
  }

  // tau over chosen plus every compatible set from index `from` on.
  bool universe_ok(int from) {
    if (s_ <= 0) return true;
    const std::uint64_t* compat = level(from);
    buf_.clear();
    for (int j : chosen_) buf_.push_back(sp_.sets[j]);
    for (int i = from; i < sp_.ns; ++i)
      if (bit(compat, i)) buf_.push_back(sp_.sets[i]);
    if (s_ == 1) return !buf_.empty();
    return !kernel::cover_within_sorted(buf_, s_ - 1);
  }

  void dfs(int d) {
    if (result_) ++result_->nodes;
    const std::uint64_t* compat = level(d);
    const long ub = static_cast<long>(chosen_.size()) + remaining(compat, d);
    if (ub < shared_best_.load(std::memory_order_relaxed)) return;
    if (tasks_ && d == collect_depth_) {
      tasks_->push_back({d, chosen_, std::vector<std::uint64_t>(compat, compat + sp_.w)});
      return;
    }
    if (d == sp_.ns) {
      leaf();
      return;
    }
    if (bit(compat, d)) {
      std::uint64_t* next = level(d + 1);
      const std::uint64_t* row = sp_.row(d);
      for (int x = 0; x < sp_.w; ++x) next[x] = compat[x] & row[x];
      chosen_.push_back(d);
      if (universe_ok(d + 1)) dfs(d + 1);
      chosen_.pop_back();
    }
    if (d == anchor_) return;
    std::copy(compat, compat + sp_.w, level(d + 1));
    if (universe_ok(d + 1)) dfs(d + 1);
  }

  void leaf() {
    buf_.clear();
    for (int j : chosen_) buf_.push_back(sp_.sets[j]);
    if (s_ >= 1 && (buf_.empty() || kernel::cover_within_sorted(buf_, s_ - 1))) return;
    const long value = static_cast<long>(buf_.size());
    if (value < shared_best_.load(std::memory_order_relaxed) || value < result_->best) return;
    if (value > result_->best) {
      result_->best = value;
      result_->records.clear();
      result_->overflow = false;
      atomic_max(shared_best_, value);
    }
    if (result_->records.size() >= record_cap_) {
      result_->overflow = true;
      return;
    }
    result_->records.push_back({buf_, {}});
  }

  const IntersectSpace& sp_;
  int s_;
  int anchor_;
  std::atomic<long>& shared_best_;
  std::size_t record_cap_;
  std::vector<std::uint64_t> levels_;
  std::vector<int> chosen_;
  std::vector<std::uint64_t> buf_;
  int collect_depth_ = -1;
  std::vector<ITask>* tasks_ = nullptr;
  TaskResult* result_ = nullptr;
};

std::optional<BigCount> intersecting_bound(int n, int k, int s, std::string& source) {
  if (s == 1 && n >= 2 * k) {
    source = "m1";
    return m1(n, k);
  }
  if (s == 2 && n > 2 * k) {
    source = "m2";
    return m2(n, k);
  }
  if (s == 3 && k == 3 && n >= 7) {
    source = "f(n,3,3)";
    return BigCount(10);
  }
  if (s == 3 && n >= 2 * k && 2 * k >= 14) {
    source = "bound_cover3";
    return bound_cover3(n, k);
  }
  return std::nullopt;
}

std::vector<CrossPair> intersecting_references(int n, int k, int s, std::string& name) {
  auto solo = [&](Family f) { return CrossPair(n, k, k, std::move(f), Family(n)); };
  if (s == 1 && n > 2 * k) {
    name = "star";
    return {solo(star(n, k, 1))};
  }
  if (s == 2 && n > 2 * k && k >= 3) {
    if (k == 3) {
      name = "HM+triangle";
      return {solo(hilton_milner(n, k)), solo(triangle(n, k))};
    }
    name = "HM";
    return {solo(hilton_milner(n, k))};
  }
  return {};
}

}  // namespace

SearchReport max_intersecting_with_tau(int n, int k, int s, const SearchOptions& opt) {
  const auto t0 = Clock::now();
  if (n < 1 || n > kMaxGround || k < 1 || k > n || s < 0)
    throw std::invalid_argument("need 1 <= k <= n <= 64 and s >= 0");
  if (s > k) throw std::invalid_argument("contradictory constraints: intersecting family has tau <= k");
  check_guard(binomial(n, k) <= opt.guard.max_intersecting_sets, opt,
              "C(n,k) > " + std::to_string(opt.guard.max_intersecting_sets));

  SearchReport r;
  r.n = n;
  r.a = k;
  r.b = k;
  r.spec = {TauConstraint::at_least(s), TauConstraint::at_least(0), false};
  r.bound = intersecting_bound(n, k, s, r.bound_source);

  IntersectSpace sp(n, k);
  // [k] has the smallest mask, so anchoring forces index 0.
  const int anchor = opt.anchor ? 0 : -1;
  std::atomic<long> best{-1};
  std::vector<ITask> tasks;
  {
    IntersectWorker seed(sp, s, anchor, best, opt.record_cap);
    seed.collect(std::min(sp.ns, std::max(0, opt.split_depth) + 1), tasks);
  }
  std::vector<TaskResult> results(tasks.size());
  const long task_count = static_cast<long>(tasks.size());
#pragma omp parallel num_threads(detail::thread_count(opt))
  {
    IntersectWorker worker(sp, s, anchor, best, opt.record_cap);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < task_count; ++i) worker.run(tasks[i], results[i]);
  }

  std::vector<Candidate> optimal;
  bool overflow = false;
  const long opt_value = merge_results(results, optimal, overflow, r.nodes);
  if (opt_value >= 0) r.optimum = BigCount(opt_value);

  const auto refs = intersecting_references(n, k, s, r.reference);
  detail::finalize(r, optimal, opt, reference_forms_for(n, refs, opt));
  if (overflow) r.classes_complete = false;
  if (!r.classes_complete) r.iso_matches_construction.reset();
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------------------

MaximalPairs enumerate_maximal_pairs(int n, int a, int b, const SearchOptions& opt) {
  if (n < 1 || n > kMaxGround || a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("need 1 <= a, b <= n <= 64");
  check_guard(binomial(n, b) <= opt.guard.max_b_sets, opt,
              "C(n,b) > " + std::to_string(opt.guard.max_b_sets));
  check_guard(binomial(n, a) <= opt.guard.max_a_sets, opt,
              "C(n,a) > " + std::to_string(opt.guard.max_a_sets));
  if (binomial(n, b) > 40) throw std::invalid_argument("maximal pairs need C(n,b) <= 40");

  const Space sp(n, a, b);
  const int wa = sp.wa;
  // G as a bitmask over bsets; fixed points of G -> D_b(D_a(G)).
  const int high = std::min(sp.nb, 10);
  const std::uint64_t chunks = std::uint64_t{1} << high;
  const std::uint64_t low_count = std::uint64_t{1} << (sp.nb - high);
  std::vector<std::vector<std::uint64_t>> found(chunks);
#pragma omp parallel num_threads(detail::thread_count(opt))
  {
    std::vector<std::uint64_t> d(wa);
#pragma omp for schedule(dynamic, 1)
    for (long c = 0; c < static_cast<long>(chunks); ++c) {
      for (std::uint64_t lo = 0; lo < low_count; ++lo) {
        const std::uint64_t gm = (static_cast<std::uint64_t>(c) << (sp.nb - high)) | lo;
        std::fill(d.begin(), d.end(), ~std::uint64_t{0});
        if (sp.na % 64) d[wa - 1] = (std::uint64_t{1} << (sp.na % 64)) - 1;
        for (std::uint64_t x = gm; x; x &= x - 1) {
          const std::uint64_t* row = sp.meet_row(std::countr_zero(x));
          for (int w = 0; w < wa; ++w) d[w] &= row[w];
        }
        std::uint64_t closure = 0;
        for (int j = 0; j < sp.nb; ++j) {
          const std::uint64_t* row = sp.meet_row(j);
          bool inside = true;
          for (int w = 0; w < wa && inside; ++w) inside = (d[w] & ~row[w]) == 0;
          if (inside) closure |= std::uint64_t{1} << j;
        }
        if (closure == gm) found[c].push_back(gm);
      }
    }
  }

  std::vector<std::uint64_t> fixed;
  for (const auto& f : found) fixed.insert(fixed.end(), f.begin(), f.end());

  // Fixed points are closed under relabeling, so walk orbits with two
  // generators of S_n (a transposition and an n-cycle) instead of taking a
  // canonical form of every labelled pair.
  std::unordered_map<std::uint64_t, int> index;
  for (int j = 0; j < sp.nb; ++j) index[sp.bsets[j]] = j;
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> swap12(n), cycle(n);
    for (int e = 1; e <= n; ++e) {
      swap12[e - 1] = e == 1 ? 2 : (e == 2 ? 1 : e);
      cycle[e - 1] = e % n + 1;
    }
    for (const auto& perm : {swap12, cycle}) {
      std::vector<int> map(sp.nb);
      for (int j = 0; j < sp.nb; ++j) map[j] = index.at(relabel(SetWord(sp.bsets[j]), perm).bits());
      gens.push_back(std::move(map));
    }
  }
  auto position = [&](std::uint64_t gm) {
    return static_cast<std::size_t>(std::lower_bound(fixed.begin(), fixed.end(), gm) - fixed.begin());
  };
  std::vector<char> seen(fixed.size(), 0);
  std::vector<std::uint64_t> reps, queue;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(fixed[i]);
    seen[i] = 1;
    queue.assign(1, fixed[i]);
    while (!queue.empty()) {
      const std::uint64_t cur = queue.back();
      queue.pop_back();
      for (const auto& map : gens) {
        std::uint64_t img = 0;
        for (std::uint64_t x = cur; x; x &= x - 1) img |= std::uint64_t{1} << map[std::countr_zero(x)];
        const std::size_t k = position(img);
        if (!seen[k]) {
          seen[k] = 1;
          queue.push_back(img);
        }
      }
    }
  }

  std::vector<Candidate> pairs(reps.size());
  std::vector<CanonicalForm> forms(reps.size());
  const int max_n = opt.force ? 64 : opt.guard.max_canon_n;
#pragma omp parallel num_threads(detail::thread_count(opt))
  {
    std::vector<std::uint64_t> d(wa);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(reps.size()); ++i) {
      std::fill(d.begin(), d.end(), ~std::uint64_t{0});
      if (sp.na % 64) d[wa - 1] = (std::uint64_t{1} << (sp.na % 64)) - 1;
      for (std::uint64_t x = reps[i]; x; x &= x - 1) {
        const int j = std::countr_zero(x);
        pairs[i].g.push_back(sp.bsets[j]);
        const std::uint64_t* row = sp.meet_row(j);
        for (int w = 0; w < wa; ++w) d[w] &= row[w];
      }
      sp.extract(d.data(), pairs[i].f);
      forms[i] = canonical_form(n, pairs[i].f, pairs[i].g, max_n);
    }
  }

  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return forms[x] < forms[y]; });
  MaximalPairs out;
  out.labelled = fixed.size();
  for (std::size_t i : order) {
    out.forms.push_back(forms[i]);
    std::vector<SetWord> f, g;
    for (auto m : pairs[i].f) f.emplace_back(m);
    for (auto m : pairs[i].g) g.emplace_back(m);
    out.classes.emplace_back(n, a, b, Family(n, std::move(f), a), Family(n, std::move(g), b));
  }
  return out;
}

}  // namespace crossint
