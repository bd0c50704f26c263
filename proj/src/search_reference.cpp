#include <chrono>
#include <stdexcept>

#include "crossint/shifting.hpp"
#include "crossint/transversal.hpp"
#include "search_internal.hpp"

// Plain brute force over every labelled pair. Slow on purpose: no pruning,
// no anchoring, no slicing rules; Family-level operations only.

namespace crossint::reference {
namespace {

constexpr int kMaxUniverse = 20;

Family pick(int n, int k, const std::vector<SetWord>& universe, std::uint64_t mask) {
  std::vector<SetWord> out;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if ((mask >> i) & 1) out.push_back(universe[i]);
  return Family(n, std::move(out), k);
}

std::vector<std::uint64_t> words(const Family& f) {
  std::vector<std::uint64_t> out;
  for (SetWord s : f) out.push_back(s.bits());
  return out;
}

SearchOptions serial_options() {
  SearchOptions opt;
  opt.threads = 1;
  return opt;
}

}  // namespace

SearchReport max_cross_sum(int n, int a, int b, const ConstraintSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::check_constraints(n, a, b, spec);
  const auto bsets = ksubsets_lex(n, b);
  const auto asets = ksubsets_lex(n, a);
  if (bsets.size() > kMaxUniverse || asets.size() > kMaxUniverse)
    throw std::invalid_argument("reference search limited to C(n,a), C(n,b) <= 20");

  SearchReport r;
  r.n = n;
  r.a = a;
  r.b = b;
  r.spec = spec;
  r.bound = theorem_bound(n, a, b, spec, &r.bound_source);

  long best = -1;
  std::vector<detail::Candidate> optimal;
  for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << bsets.size()); ++gm) {
    const Family g = pick(n, b, bsets, gm);
    if (!spec.g.admits(tau(g))) continue;
    if (spec.initial_only && !is_initial(g)) continue;
    for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << asets.size()); ++fm) {
      ++r.nodes;
      const Family f = pick(n, a, asets, fm);
      if (!is_cross_intersecting(f, g)) continue;
      if (!spec.f.admits(tau(f))) continue;
      if (spec.initial_only && !is_initial(f)) continue;
      const long total = static_cast<long>(f.size() + g.size());
      if (total < best) continue;
      if (total > best) {
        best = total;
        optimal.clear();
      }
      optimal.push_back({words(f), words(g)});
    }
  }
  if (best >= 0) r.optimum = BigCount(best);
  std::vector<CanonicalForm> ref;
  if (auto p = theorem_construction(n, a, b, spec, &r.reference)) ref.push_back(canonical_form(*p));
  detail::finalize(r, optimal, serial_options(), ref);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SearchReport max_intersecting_with_tau(int n, int k, int s) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sets = ksubsets_lex(n, k);
  if (sets.size() > kMaxUniverse)
    throw std::invalid_argument("reference search limited to C(n,k) <= 20");

  SearchReport r;
  r.n = n;
  r.a = k;
  r.b = k;
  r.spec = {TauConstraint::at_least(s), TauConstraint::at_least(0), false};
  long best = -1;
  std::vector<detail::Candidate> optimal;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << sets.size()); ++m) {
    ++r.nodes;
    const Family f = pick(n, k, sets, m);
    if (!is_intersecting(f) || tau(f) < s) continue;
    const long size = static_cast<long>(f.size());
    if (size < best) continue;
    if (size > best) {
      best = size;
      optimal.clear();
    }
    optimal.push_back({words(f), {}});
  }
  if (best >= 0) r.optimum = BigCount(best);
  detail::finalize(r, optimal, serial_options(), {});
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace crossint::reference
