#pragma once

#include <cstdint>
#include <span>

#include "crossint/family.hpp"

namespace crossint {

/// A cover T of some family together with its size.
struct TransversalSet {
  SetWord cover;
  int size = 0;
};

struct TauResult {
  int tau = 0;
  TransversalSet witness;
  std::uint64_t nodes = 0;
};

bool is_cover(const Family& f, SetWord t);

/// Covering number. tau of the empty family is 0. Throws std::domain_error
/// when the family contains the empty set.
int tau(const Family& f);
TauResult tau_detailed(const Family& f);

/// True iff some cover of size <= k exists. Same preconditions as tau.
bool has_cover_within(const Family& f, int k);

/// T^(i)(F): all covers of size exactly i.
Family transversals_of_size(const Family& f, int i);

namespace kernel {

// Mask-level entry points shared with the search kernels. The span must be
// sorted by (popcount, value) and free of zero masks.

TauResult tau_sorted(std::span<const std::uint64_t> masks);
bool cover_within_sorted(std::span<const std::uint64_t> masks, int k);

/// Sorts in place into the order the kernels expect.
void sort_for_branching(std::span<std::uint64_t> masks);

}  // namespace kernel

}  // namespace crossint
