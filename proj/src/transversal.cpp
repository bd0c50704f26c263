#include "crossint/transversal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace crossint {
namespace kernel {
namespace {

// Branch and bound: take the first member (smallest, then lowest mask) not
// yet hit, branch on its elements in increasing order. Bounded by the best
// cover found so far and by a greedy packing of disjoint unhit members.
struct Solver {
  std::span<const std::uint64_t> masks;
  int best = 0;
  std::uint64_t best_cover = 0;
  bool stop_at_first = false;
  bool done = false;
  std::uint64_t nodes = 0;

  int disjoint_packing(std::uint64_t chosen, std::size_t from) const {
    std::uint64_t used = 0;
    int count = 0;
    for (std::size_t i = from; i < masks.size(); ++i) {
      const std::uint64_t m = masks[i];
      if ((m & chosen) == 0 && (m & used) == 0) {
        used |= m;
        ++count;
      }
    }
    return count;
  }

  void branch(std::uint64_t chosen, int depth) {
    if (done) return;
    ++nodes;
    std::size_t idx = 0;
    while (idx < masks.size() && (masks[idx] & chosen)) ++idx;
    if (idx == masks.size()) {
      if (depth < best) {
        best = depth;
        best_cover = chosen;
        if (stop_at_first) done = true;
      }
      return;
    }
    if (depth + disjoint_packing(chosen, idx) >= best) return;
    for (std::uint64_t m = masks[idx]; m; m &= m - 1) {
      branch(chosen | (m & -m), depth + 1);
      if (done) return;
    }
  }
};

}  // namespace

void sort_for_branching(std::span<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
}

TauResult tau_sorted(std::span<const std::uint64_t> masks) {
  std::uint64_t support = 0;
  for (std::uint64_t m : masks) support |= m;
  Solver s{masks, std::popcount(support), support};
  s.branch(0, 0);
  return TauResult{s.best, TransversalSet{SetWord{s.best_cover}, s.best}, s.nodes};
}

bool cover_within_sorted(std::span<const std::uint64_t> masks, int k) {
  if (k < 0) return false;
  if (masks.empty()) return true;
  Solver s{masks, k + 1, 0, true};
  s.branch(0, 0);
  return s.best <= k;
}

}  // namespace kernel

namespace {

std::vector<std::uint64_t> branching_masks(const Family& f) {
  if (f.contains_empty_set())
    throw std::domain_error("covering number undefined: family contains the empty set");
  std::vector<std::uint64_t> masks;
  masks.reserve(f.size());
  for (SetWord s : f) masks.push_back(s.bits());
  kernel::sort_for_branching(masks);
  return masks;
}

}  // namespace

bool is_cover(const Family& f, SetWord t) {
  return std::all_of(f.begin(), f.end(), [t](SetWord s) { return s.meets(t); });
}

TauResult tau_detailed(const Family& f) { return kernel::tau_sorted(branching_masks(f)); }

int tau(const Family& f) { return tau_detailed(f).tau; }

bool has_cover_within(const Family& f, int k) {
  return kernel::cover_within_sorted(branching_masks(f), k);
}

Family transversals_of_size(const Family& f, int i) {
  if (i < 0 || i > f.n()) throw std::invalid_argument("transversal size out of range");
  const std::vector<std::uint64_t> masks = branching_masks(f);
  const int n = f.n();
  std::vector<SetWord> out;

  // Choose elements left to right. A member whose largest element lies
  // before the current position and is still unhit can never be hit.
  std::vector<int> max_elem(masks.size());
  for (std::size_t m = 0; m < masks.size(); ++m) max_elem[m] = SetWord{masks[m]}.max_element();

  auto dead = [&](std::uint64_t chosen, int pos) {
    for (std::size_t m = 0; m < masks.size(); ++m)
      if (max_elem[m] < pos && (masks[m] & chosen) == 0) return true;
    return false;
  };

  auto rec = [&](auto&& self, int pos, std::uint64_t chosen, int left) -> void {
    if (dead(chosen, pos)) return;
    if (left == 0) {
      if (std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return m & chosen; }))
        out.emplace_back(chosen);
      return;
    }
    if (n - pos + 1 < left) return;
    self(self, pos + 1, chosen | (std::uint64_t{1} << (pos - 1)), left - 1);
    self(self, pos + 1, chosen, left);
  };
  rec(rec, 1, 0, i);
  return Family(n, std::move(out), i);
}

}  // namespace crossint
