#include "crossint/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace crossint {
namespace {

// Nibble lookup tables: relabeling a mask costs one lookup per 4 elements.
struct Relabeler {
  int chunks = 0;
  std::array<std::array<std::uint64_t, 16>, 16> table{};

  void load(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    chunks = (n + 3) / 4;
    for (int c = 0; c < chunks; ++c)
      for (int v = 0; v < 16; ++v) {
        std::uint64_t out = 0;
        for (int bit = 0; bit < 4; ++bit) {
          const int e = c * 4 + bit;
          if (e < n && ((v >> bit) & 1)) out |= std::uint64_t{1} << (perm[e] - 1);
        }
        table[c][v] = out;
      }
  }

  std::uint64_t operator()(std::uint64_t m) const {
    std::uint64_t out = 0;
    for (int c = 0; c < chunks; ++c) out |= table[c][(m >> (4 * c)) & 15];
    return out;
  }
};

}  // namespace

std::string CanonicalForm::to_string() const {
  std::string s = "n" + std::to_string(n) + ":";
  char buf[24];
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i == f_count) s += '|';
    else if (i) s += '.';
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(words[i]));
    s += buf;
  }
  if (words.size() == f_count) s += '|';
  return s;
}

CanonicalForm canonical_form(int n, std::span<const std::uint64_t> f,
                             std::span<const std::uint64_t> g, int max_n) {
  if (n > max_n || n > 64)
    throw std::invalid_argument("canonical form limited to n <= " + std::to_string(max_n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);

  CanonicalForm best{n, f.size(), {}};
  std::vector<std::uint64_t> fbuf(f.size()), gbuf(g.size());
  Relabeler relabeler;
  bool first = true;
  do {
    relabeler.load(perm);
    for (std::size_t i = 0; i < f.size(); ++i) fbuf[i] = relabeler(f[i]);
    std::sort(fbuf.begin(), fbuf.end());
    int cmp = 0;
    if (!first) {
      const auto fb = best.words.begin();
      const auto r = std::lexicographical_compare_three_way(fbuf.begin(), fbuf.end(), fb,
                                                            fb + static_cast<long>(f.size()));
      cmp = r < 0 ? -1 : (r > 0 ? 1 : 0);
      if (cmp > 0) continue;
    }
    for (std::size_t i = 0; i < g.size(); ++i) gbuf[i] = relabeler(g[i]);
    std::sort(gbuf.begin(), gbuf.end());
    if (!first && cmp == 0) {
      const auto gb = best.words.begin() + static_cast<long>(f.size());
      if (!std::lexicographical_compare(gbuf.begin(), gbuf.end(), gb, best.words.end())) continue;
    }
    best.words.assign(fbuf.begin(), fbuf.end());
    best.words.insert(best.words.end(), gbuf.begin(), gbuf.end());
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CanonicalForm canonical_form(const CrossPair& p, int max_n) {
  std::vector<std::uint64_t> f, g;
  for (SetWord s : p.f) f.push_back(s.bits());
  for (SetWord s : p.g) g.push_back(s.bits());
  return canonical_form(p.n, f, g, max_n);
}

CanonicalForm canonical_form(const Family& fam, int max_n) {
  std::vector<std::uint64_t> f;
  for (SetWord s : fam) f.push_back(s.bits());
  return canonical_form(fam.n(), f, {}, max_n);
}

SetWord relabel(SetWord s, std::span<const int> perm) {
  SetWord out;
  for (int e : s.elements()) out = out.with(perm[e - 1]);
  return out;
}

Family relabel(const Family& f, std::span<const int> perm) {
  std::vector<SetWord> out;
  for (SetWord s : f) out.push_back(relabel(s, perm));
  return Family(f.n(), std::move(out), f.uniformity());
}

CrossPair relabel(const CrossPair& p, std::span<const int> perm) {
  return CrossPair(p.n, p.a, p.b, relabel(p.f, perm), relabel(p.g, perm));
}

}  // namespace crossint
