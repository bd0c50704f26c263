#include "crossint/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace crossint {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

template <class Pred>
Family ksets_where(int n, int k, Pred&& keep) {
  std::vector<SetWord> out;
  for_each_ksubset(n, k, [&](SetWord s) {
    if (keep(s)) out.push_back(s);
  });
  return Family(n, std::move(out), k);
}

Family union_of(const Family& x, const Family& y) {
  std::vector<SetWord> all(x.begin(), x.end());
  all.insert(all.end(), y.begin(), y.end());
  return Family(x.n(), std::move(all), x.uniformity());
}

}  // namespace

std::string tag_name(Tag tag) {
  switch (tag) {
    case Tag::Star: return "star";
    case Tag::HiltonMilner: return "HM";
    case Tag::Triangle: return "triangle";
    case Tag::FranklG: return "G";
    case Tag::Mt: return "Mt";
    case Tag::Mst: return "Mst";
    case Tag::Ht: return "Ht";
    case Tag::Hst: return "Hst";
    case Tag::CompleteUniform: return "complete";
  }
  return "?";
}

Tag parse_tag(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Tag t : {Tag::Star, Tag::HiltonMilner, Tag::Triangle, Tag::FranklG, Tag::Mt, Tag::Mst,
                Tag::Ht, Tag::Hst, Tag::CompleteUniform}) {
    std::string known = tag_name(t);
    std::transform(known.begin(), known.end(), known.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (known == lower) return t;
  }
  if (lower == "hilton_milner" || lower == "hilton-milner") return Tag::HiltonMilner;
  if (lower == "frankl_g" || lower == "frankl-g") return Tag::FranklG;
  throw std::invalid_argument("unknown family tag '" + name + "'");
}

Family star(int n, int k, int i) {
  require(n >= 1 && n <= kMaxGround, "star: n out of range");
  require(k >= 1 && k <= n && i >= 1 && i <= n, "star: need 1 <= k <= n and 1 <= i <= n");
  return ksets_where(n, k, [i](SetWord s) { return s.contains(i); });
}

Family hilton_milner(int n, int k) {
  require(n <= kMaxGround && 2 * k >= 4 && n > 2 * k, "hilton_milner: need n > 2k >= 4");
  const SetWord block = SetWord::interval(2, k + 1);
  return ksets_where(n, k, [block](SetWord s) {
    return (s.contains(1) && s.meets(block)) || s == block;
  });
}

Family triangle(int n, int k) {
  require(n >= 3 && n <= kMaxGround && k >= 2 && k <= n, "triangle: need 2 <= k <= n, n >= 3");
  const SetWord tri = SetWord::interval(1, 3);
  return ksets_where(n, k, [tri](SetWord s) { return (s & tri).size() >= 2; });
}

Family frankl_g_blocks(int n, int k) {
  require(k >= 3 && n >= 2 * k && n <= kMaxGround, "frankl_g: need k >= 3 and n >= 2k");
  const SetWord tail = SetWord::interval(k + 2, 2 * k);
  return Family(n, {SetWord::interval(2, k + 1), tail.with(2), tail.with(3)}, k);
}

Family frankl_g(int n, int k) {
  const Family blocks = frankl_g_blocks(n, k);
  const Family companions = ksets_where(n, k, [&](SetWord s) {
    if (!s.contains(1)) return false;
    return std::all_of(blocks.begin(), blocks.end(), [s](SetWord b) { return s.meets(b); });
  });
  return union_of(companions, blocks);
}

CrossPair construct_mt(int n, int a, int b, int t) {
  require(n <= kMaxGround && t >= 1 && b >= 1, "Mt: need t >= 1 and b >= 1");
  require(t * b <= n, "Mt: cannot place t disjoint b-sets (tb > n)");
  require(a >= t && a <= n, "Mt: need t <= a <= n");
  std::vector<SetWord> blocks;
  for (int i = 1; i <= t; ++i) blocks.push_back(SetWord::interval((i - 1) * b + 1, i * b));
  Family g(n, std::move(blocks), b);
  Family f = max_companion(g, a);
  return CrossPair(n, a, b, std::move(f), std::move(g));
}

CrossPair construct_mst(int n, int a, int b, int t, int s) {
  require(n <= kMaxGround && t >= 1 && b >= 1, "Mst: need t >= 1 and b >= 1");
  require(s >= 1 && s <= b, "Mst: need 1 <= s <= b");
  require(s + (t - 1) * b <= n, "Mst: cannot place blocks (s + (t-1)b > n)");
  require(a >= 1 && a <= n && b <= n, "Mst: need 1 <= a, b <= n");
  const SetWord head = SetWord::interval(1, s);
  Family g0 = ksets_where(n, b, [head](SetWord x) { return head.subset_of(x); });
  std::vector<SetWord> parts(g0.begin(), g0.end());
  for (int i = 1; i < t; ++i) parts.push_back(SetWord::interval(s + (i - 1) * b + 1, s + i * b));
  Family g(n, std::move(parts), b);
  Family f = max_companion(g, a);
  return CrossPair(n, a, b, std::move(f), std::move(g));
}

CrossPair construct_ht(int n, int a, int b, int t) {
  require(n <= kMaxGround && t >= 1 && b >= 1, "Ht: need t >= 1 and b >= 1");
  require(b + t - 1 <= n, "Ht: need b + t - 1 <= n");
  require(a >= t && a <= n, "Ht: need t <= a <= n");
  const SetWord prefix = SetWord::interval(1, b + t - 1);
  Family f = ksets_where(n, a, [&](SetWord x) { return (x & prefix).size() >= t; });
  Family g = ksets_where(n, b, [&](SetWord x) { return x.subset_of(prefix); });
  return CrossPair(n, a, b, std::move(f), std::move(g));
}

CrossPair construct_hst(int n, int a, int b, int t, int s) {
  require(n <= kMaxGround && t >= 1 && b >= 1, "Hst: need t >= 1 and b >= 1");
  require(s >= 1 && s <= b, "Hst: need 1 <= s <= b");
  require(b + t - 1 <= n, "Hst: need b + t - 1 <= n");
  require(a >= t && a <= n, "Hst: need t <= a <= n");
  const SetWord prefix = SetWord::interval(1, b + t - 1);
  const SetWord head = SetWord::interval(1, s);
  Family f = ksets_where(n, a, [&](SetWord x) {
    return x.meets(head) && (x & prefix).size() >= t;
  });
  Family g = ksets_where(n, b, [&](SetWord x) {
    return head.subset_of(x) || x.subset_of(prefix);
  });
  return CrossPair(n, a, b, std::move(f), std::move(g));
}

CrossPair remark_companion(int n, int a, int b, int t) {
  require(n <= kMaxGround && t >= 1 && t <= n, "remark_companion: need 1 <= t <= n");
  require(a >= 1 && a <= n && b >= 1 && b <= n, "remark_companion: a, b out of range");
  const SetWord core = SetWord::interval(1, t);
  Family g = ksets_where(n, b, [core](SetWord x) { return x.meets(core); });
  Family f = max_companion(g, a);
  return CrossPair(n, a, b, std::move(f), std::move(g));
}

NamedFamily build(Tag tag, const Params& p) {
  auto need = [](const std::optional<int>& v, const char* what) {
    if (!v) throw std::invalid_argument(std::string("missing parameter ") + what);
    return *v;
  };
  switch (tag) {
    case Tag::Star: return {tag, p, star(p.n, p.a, need(p.i, "i"))};
    case Tag::HiltonMilner: return {tag, p, hilton_milner(p.n, p.a)};
    case Tag::Triangle: return {tag, p, triangle(p.n, p.a)};
    case Tag::FranklG: return {tag, p, frankl_g(p.n, p.a)};
    case Tag::CompleteUniform: return {tag, p, Family::complete(p.n, p.a)};
    case Tag::Mt: return {tag, p, construct_mt(p.n, p.a, p.b, need(p.t, "t"))};
    case Tag::Mst: return {tag, p, construct_mst(p.n, p.a, p.b, need(p.t, "t"), need(p.s, "s"))};
    case Tag::Ht: return {tag, p, construct_ht(p.n, p.a, p.b, need(p.t, "t"))};
    case Tag::Hst: return {tag, p, construct_hst(p.n, p.a, p.b, need(p.t, "t"), need(p.s, "s"))};
  }
  throw std::invalid_argument("unknown tag");
}

}  // namespace crossint
