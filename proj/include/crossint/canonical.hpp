#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crossint/family.hpp"

namespace crossint {

/// Lexicographically least serialization of a colored pair over all
/// relabelings of [n]: the sorted relabeled F-part followed by the sorted
/// relabeled G-part.
struct CanonicalForm {
  int n = 0;
  std::size_t f_count = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  std::string to_string() const;
};

inline constexpr int kDefaultCanonLimit = 10;

/// Throws std::invalid_argument when n exceeds max_n.
CanonicalForm canonical_form(const CrossPair& p, int max_n = kDefaultCanonLimit);
CanonicalForm canonical_form(const Family& f, int max_n = kDefaultCanonLimit);

/// Mask-level version; perm[e-1] is the image of element e.
CanonicalForm canonical_form(int n, std::span<const std::uint64_t> f,
                             std::span<const std::uint64_t> g, int max_n = kDefaultCanonLimit);

SetWord relabel(SetWord s, std::span<const int> perm);
Family relabel(const Family& f, std::span<const int> perm);
CrossPair relabel(const CrossPair& p, std::span<const int> perm);

}  // namespace crossint
