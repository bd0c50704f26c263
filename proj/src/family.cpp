#include "crossint/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crossint {

SetWord SetWord::make(std::span<const int> elements, int n) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [0, 64]");
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) + " outside [1, " +
                                  std::to_string(n) + "]");
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) throw std::invalid_argument("duplicate element " + std::to_string(e));
    bits |= bit;
  }
  return SetWord{bits};
}

std::vector<int> SetWord::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string SetWord::to_string() const {
  if (empty()) return "{}";
  std::string s;
  for (int e : elements()) {
    if (!s.empty()) s += ',';
    s += std::to_string(e);
  }
  return s;
}

std::vector<SetWord> ksubsets_lex(int n, int k) {
  std::vector<SetWord> out;
  for_each_ksubset(n, k, [&](SetWord s) { out.push_back(s); });
  return out;
}

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set size must be in [0, 64]");
}

std::optional<int> infer_uniformity(const std::vector<SetWord>& members) {
  if (members.empty()) return std::nullopt;
  const int k = members.front().size();
  for (SetWord s : members)
    if (s.size() != k) return std::nullopt;
  return k;
}

}  // namespace

Family::Family(int n) : n_(n) { check_ground(n); }

Family::Family(Sorted, int n, std::vector<SetWord> members, std::optional<int> uniformity)
    : n_(n), uniformity_(uniformity), members_(std::move(members)) {}

Family::Family(int n, std::vector<SetWord> members, std::optional<int> uniformity) : n_(n) {
  check_ground(n);
  for (SetWord s : members) {
    if (!s.within(n)) throw std::invalid_argument("member " + s.to_string() + " not inside [n]");
    if (uniformity && s.size() != *uniformity)
      throw std::invalid_argument("member " + s.to_string() + " has size " +
                                  std::to_string(s.size()) + ", expected " +
                                  std::to_string(*uniformity));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  uniformity_ = uniformity ? uniformity : infer_uniformity(members_);
}

Family Family::from_distinct(int n, std::vector<SetWord> members,
                             std::optional<int> uniformity) {
  const std::size_t before = members.size();
  Family f(n, std::move(members), uniformity);
  if (f.size() != before) throw std::invalid_argument("duplicate member in family");
  return f;
}

Family Family::complete(int n, int k) {
  check_ground(n);
  std::vector<SetWord> all = ksubsets_lex(n, k);
  std::sort(all.begin(), all.end());
  return Family(Sorted{}, n, std::move(all), k);
}

bool Family::contains(SetWord s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::map<int, std::size_t> Family::size_profile() const {
  std::map<int, std::size_t> out;
  for (SetWord s : members_) ++out[s.size()];
  return out;
}

SetWord Family::support() const {
  SetWord u;
  for (SetWord s : members_) u = u | s;
  return u;
}

CrossPair::CrossPair(int n_, int a_, int b_, Family f_, Family g_)
    : n(n_), a(a_), b(b_), f(std::move(f_)), g(std::move(g_)) {
  if (a < 1 || b < 1) throw std::invalid_argument("cross pair needs a >= 1 and b >= 1");
  if (f.n() != n || g.n() != n) throw std::invalid_argument("cross pair ground sets differ");
  for (SetWord s : f)
    if (s.size() != a) throw std::invalid_argument("F-part is not a-uniform");
  for (SetWord s : g)
    if (s.size() != b) throw std::invalid_argument("G-part is not b-uniform");
}

Family sub_family_link(const Family& f, SetWord a) {
  std::vector<SetWord> out;
  for (SetWord s : f)
    if (a.subset_of(s)) out.push_back(s - a);
  std::optional<int> k;
  if (f.uniformity()) k = *f.uniformity() - a.size();
  return Family(f.n(), std::move(out), k);
}

Family sub_family_avoid(const Family& f, SetWord b) {
  return f.filter([b](SetWord s) { return !s.meets(b); });
}

Family sub_family_link_avoid(const Family& f, SetWord a, SetWord b) {
  if (a.meets(b)) throw std::invalid_argument("link set and avoid set must be disjoint");
  std::vector<SetWord> out;
  for (SetWord s : f)
    if (a.subset_of(s) && !s.meets(b)) out.push_back(s - a);
  std::optional<int> k;
  if (f.uniformity()) k = *f.uniformity() - a.size();
  return Family(f.n(), std::move(out), k);
}

Family restrict_trace(const Family& f, SetWord t) {
  std::vector<SetWord> out;
  out.reserve(f.size());
  for (SetWord s : f) out.push_back(s - t);
  return Family(f.n(), std::move(out));
}

Family upper_shadow(const Family& f, int target) {
  if (f.empty()) return Family(f.n());
  const auto k = f.uniformity();
  if (!k) throw std::invalid_argument("upper shadow needs a uniform family");
  if (target < *k || target > f.n()) throw std::invalid_argument("shadow target out of range");
  std::vector<SetWord> out;
  const int extra = target - *k;
  for (SetWord s : f) {
    const std::vector<int> outside = (SetWord::ground(f.n()) - s).elements();
    for_each_ksubset(static_cast<int>(outside.size()), extra, [&](SetWord pick) {
      SetWord grown = s;
      for (int idx : pick.elements()) grown = grown.with(outside[idx - 1]);
      out.push_back(grown);
    });
  }
  return Family(f.n(), std::move(out), target);
}

bool is_cross_intersecting(const Family& f, const Family& g) {
  for (SetWord x : f)
    for (SetWord y : g)
      if (!x.meets(y)) return false;
  return true;
}

bool is_cross_intersecting(const CrossPair& p) { return is_cross_intersecting(p.f, p.g); }

bool is_intersecting(const Family& f) {
  const auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!m[i].meets(m[j])) return false;
  return true;
}

Family max_companion(const Family& g, int a) {
  if (a < 0 || a > g.n()) throw std::invalid_argument("companion size out of range");
  std::vector<SetWord> out;
  for_each_ksubset(g.n(), a, [&](SetWord s) {
    for (SetWord y : g)
      if (!s.meets(y)) return;
    out.push_back(s);
  });
  return Family(g.n(), std::move(out), a);
}

}  // namespace crossint
