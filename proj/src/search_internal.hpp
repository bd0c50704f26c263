#pragma once

#include <cstdint>
#include <vector>

#include "crossint/search.hpp"

namespace crossint::detail {

/// One optimal labelled pair as raw masks.
struct Candidate {
  std::vector<std::uint64_t> f;
  std::vector<std::uint64_t> g;
};

/// Fills classes, witnesses, iso verdict and the bound fields from the
/// optimal candidates. Canonical forms are computed in parallel; the result
/// does not depend on the thread count.
void finalize(SearchReport& r, std::vector<Candidate>& optimal, const SearchOptions& opt,
              const std::vector<CanonicalForm>& reference_forms);

/// Rejects specs no pair can satisfy.
void check_constraints(int n, int a, int b, const ConstraintSpec& spec);

/// Thread count the kernels use for these options.
int thread_count(const SearchOptions& opt);

/// Popcount over a word span.
int popcount_words(const std::uint64_t* w, int words);

}  // namespace crossint::detail
