#include <algorithm>
#include <bit>
#include <stdexcept>

#include <omp.h>

#include "crossint/constructions.hpp"
#include "search_internal.hpp"

namespace crossint {

std::string TauConstraint::to_string() const {
  return (kind == Kind::AtLeast ? ">=" : "=") + std::to_string(value);
}

std::optional<BigCount> theorem_bound(int n, int a, int b, const ConstraintSpec& spec,
                                      std::string* source) {
  const int s = spec.f.value;
  const int t = spec.g.value;
  if (s < 1 || t < 1 || s > b) return std::nullopt;
  if (a < b + t - 1) return std::nullopt;
  auto named = [&](const char* name, BigCount v) {
    if (source) *source = name;
    return std::optional<BigCount>(std::move(v));
  };
  const bool exact_f = spec.f.kind == TauConstraint::Kind::Exactly;
  if (!spec.initial_only) {
    if (n < std::max(a + b, b * t) || b < 2) return std::nullopt;
    if (!exact_f) {
      if (s >= 2 && t < 2) return std::nullopt;
      return named("bound_1t", bound_1t(n, a, b, t));
    }
    if (t < 2) return std::nullopt;
    return named("bound_st", bound_st(n, a, b, t, s));
  }
  if (n < a + b) return std::nullopt;
  if (!exact_f) {
    if (s >= 2 && (b < 2 || t < 2)) return std::nullopt;
    return named("size_ht", size_ht(n, a, b, t));
  }
  if (t < 2 || (s >= 2 && b < 2)) return std::nullopt;
  return named("size_hst", size_hst(n, a, b, t, s));
}

std::optional<CrossPair> theorem_construction(int n, int a, int b, const ConstraintSpec& spec,
                                              std::string* name) {
  if (n <= a + b) return std::nullopt;
  std::string source;
  if (!theorem_bound(n, a, b, spec, &source)) return std::nullopt;
  const int s = spec.f.value;
  const int t = spec.g.value;
  // Frankl-Tokushige leaves a = b = 2 open for uniqueness.
  if (a == 2 && b == 2) return std::nullopt;
  auto tagged = [&](std::string label, CrossPair p) {
    if (name) *name = std::move(label);
    return std::optional<CrossPair>(std::move(p));
  };
  const std::string nab = "(" + std::to_string(n) + "," + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(t);
  if (source == "bound_1t") return tagged("Mt" + nab + ")", construct_mt(n, a, b, t));
  if (source == "bound_st")
    return tagged("Mst" + nab + "," + std::to_string(s) + ")", construct_mst(n, a, b, t, s));
  if (source == "size_ht") return tagged("Ht" + nab + ")", construct_ht(n, a, b, t));
  return tagged("Hst" + nab + "," + std::to_string(s) + ")", construct_hst(n, a, b, t, s));
}

namespace detail {

int thread_count(const SearchOptions& opt) {
  return opt.threads > 0 ? opt.threads : omp_get_max_threads();
}

int popcount_words(const std::uint64_t* w, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(w[i]);
  return c;
}

void check_constraints(int n, int a, int b, const ConstraintSpec& spec) {
  if (n < 1 || n > kMaxGround || a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("need 1 <= a, b <= n <= 64");
  const int s = spec.f.value, t = spec.g.value;
  if (s < 0 || t < 0) throw std::invalid_argument("tau constraints must be nonnegative");
  // A nonempty a-uniform family on [n] has tau <= n - a + 1, and tau(F) <= b
  // once G is nonempty.
  if (s > n - a + 1 || t > n - b + 1)
    throw std::invalid_argument("contradictory constraints: tau target exceeds n - k + 1");
  const bool exact_f = spec.f.kind == TauConstraint::Kind::Exactly;
  const bool exact_g = spec.g.kind == TauConstraint::Kind::Exactly;
  if (exact_f && s > b && t >= 1)
    throw std::invalid_argument("contradictory constraints: tau(F) = s > b with G nonempty");
  if (exact_g && t > a && s >= 1)
    throw std::invalid_argument("contradictory constraints: tau(G) = t > a with F nonempty");
}

void finalize(SearchReport& r, std::vector<Candidate>& optimal, const SearchOptions& opt,
              const std::vector<CanonicalForm>& reference_forms) {
  r.optimal_labelled = optimal.size();
  if (r.bound && r.optimum) r.bound_matched = *r.bound == *r.optimum;

  std::vector<CanonicalForm> forms(optimal.size());
  const long count = static_cast<long>(optimal.size());
  const int max_n = opt.force ? 64 : opt.guard.max_canon_n;
  bool too_large = false;
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(opt))
  for (long i = 0; i < count; ++i) {
    try {
      forms[i] = canonical_form(r.n, optimal[i].f, optimal[i].g, max_n);
    } catch (const std::invalid_argument&) {
#pragma omp atomic write
      too_large = true;
    }
  }
  if (too_large) {
    r.classes_complete = false;
    r.iso_class_count = 0;
  } else {
    std::vector<std::size_t> order(optimal.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto labelled_key = [&](std::size_t i) {
      std::vector<std::uint64_t> k = optimal[i].f;
      std::sort(k.begin(), k.end());
      std::vector<std::uint64_t> g = optimal[i].g;
      std::sort(g.begin(), g.end());
      k.push_back(~std::uint64_t{0});
      k.insert(k.end(), g.begin(), g.end());
      return k;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (forms[x] != forms[y]) return forms[x] < forms[y];
      return labelled_key(x) < labelled_key(y);
    });
    for (std::size_t i : order) {
      if (r.classes.empty() || r.classes.back().form != forms[i])
        r.classes.push_back({forms[i], 0});
      ++r.classes.back().labelled;
    }
    r.iso_class_count = r.classes.size();
    for (std::size_t i = 0; i < order.size() && r.witnesses.size() < opt.witness_cap; ++i) {
      const Candidate& c = optimal[order[i]];
      std::vector<SetWord> f, g;
      for (auto m : c.f) f.emplace_back(m);
      for (auto m : c.g) g.emplace_back(m);
      r.witnesses.emplace_back(r.n, r.a, r.b, Family(r.n, std::move(f), r.a),
                               Family(r.n, std::move(g), r.b));
    }
  }

  if (!reference_forms.empty() && r.classes_complete && r.optimum) {
    bool match = r.classes.size() == reference_forms.size();
    for (std::size_t i = 0; match && i < reference_forms.size(); ++i)
      match = r.classes[i].form == reference_forms[i];
    r.iso_matches_construction = match;
  }
}

}  // namespace detail
}  // namespace crossint
