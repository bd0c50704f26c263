#include "crossint/shifting.hpp"

#include <stdexcept>
#include <string>

namespace crossint {

Family shift_ij(const Family& f, int i, int j, std::size_t& moved) {
  if (i < 1 || j > f.n() || i >= j)
    throw std::invalid_argument("shift needs 1 <= i < j <= n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
  moved = 0;
  std::vector<SetWord> out;
  out.reserve(f.size());
  for (SetWord s : f) {
    if (s.contains(j) && !s.contains(i)) {
      const SetWord t = s.without(j).with(i);
      if (!f.contains(t)) {
        out.push_back(t);
        ++moved;
        continue;
      }
    }
    out.push_back(s);
  }
  return Family(f.n(), std::move(out), f.uniformity());
}

Family shift_ij(const Family& f, int i, int j) {
  std::size_t moved = 0;
  return shift_ij(f, i, j, moved);
}

bool is_initial(const Family& f) {
  for (SetWord s : f)
    for (int j = 2; j <= f.n(); ++j) {
      if (!s.contains(j)) continue;
      for (int i = 1; i < j; ++i)
        if (!s.contains(i) && !f.contains(s.without(j).with(i))) return false;
    }
  return true;
}

CompressResult compress_to_initial(const Family& f) {
  CompressResult r{f, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= f.n(); ++i)
      for (int j = i + 1; j <= f.n(); ++j) {
        std::size_t moved = 0;
        Family next = shift_ij(r.family, i, j, moved);
        if (moved) {
          r.family = std::move(next);
          r.log.push_back({i, j, moved});
          changed = true;
        }
      }
  }
  return r;
}

PairCompressResult compress_pair(const CrossPair& p, const PairStop& stop) {
  if (!is_cross_intersecting(p)) throw std::invalid_argument("pair is not cross-intersecting");
  PairCompressResult r{p, {}, false};
  if (stop && stop(r.pair)) {
    r.stopped_early = true;
    return r;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= p.n; ++i)
      for (int j = i + 1; j <= p.n; ++j) {
        std::size_t moved_f = 0, moved_g = 0;
        Family f = shift_ij(r.pair.f, i, j, moved_f);
        Family g = shift_ij(r.pair.g, i, j, moved_g);
        if (moved_f + moved_g == 0) continue;
        r.pair.f = std::move(f);
        r.pair.g = std::move(g);
        r.log.push_back({i, j, moved_f + moved_g});
        changed = true;
        if (stop && stop(r.pair)) {
          r.stopped_early = true;
          return r;
        }
      }
  }
  return r;
}

}  // namespace crossint
