#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "crossint/family.hpp"

namespace crossint {

struct ShiftRecord {
  int i = 0;
  int j = 0;
  std::size_t moved = 0;
  bool operator==(const ShiftRecord&) const = default;
};

/// Effective shifts in application order. Every record has i < j.
using ShiftLog = std::vector<ShiftRecord>;

/// S_ij: replace j by i in each member where i is absent and the result is
/// not already a member. Throws std::invalid_argument unless 1 <= i < j <= n.
Family shift_ij(const Family& f, int i, int j);

/// Same, also reporting how many members moved.
Family shift_ij(const Family& f, int i, int j, std::size_t& moved);

bool is_initial(const Family& f);

struct CompressResult {
  Family family;
  ShiftLog log;
};

/// Sweeps (i, j) lexicographically until a full pass changes nothing.
CompressResult compress_to_initial(const Family& f);

struct PairCompressResult {
  CrossPair pair;
  ShiftLog log;
  bool stopped_early = false;
};

using PairStop = std::function<bool(const CrossPair&)>;

/// Applies each S_ij to both parts in the same step. The optional stop
/// predicate is consulted before the first shift and after every effective
/// one. Throws std::invalid_argument if the input is not cross-intersecting.
PairCompressResult compress_pair(const CrossPair& p, const PairStop& stop = {});

}  // namespace crossint
