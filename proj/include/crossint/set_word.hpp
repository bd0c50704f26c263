#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crossint {

inline constexpr int kMaxGround = 64;

/// A subset of the ground set [n], n <= 64. Element e (1-based) lives in bit e-1.
class SetWord {
 public:
  constexpr SetWord() = default;
  constexpr explicit SetWord(std::uint64_t bits) : bits_(bits) {}

  /// Throws std::invalid_argument on an element outside [1, n] or a repeat.
  static SetWord make(std::span<const int> elements, int n);
  static SetWord make(std::initializer_list<int> elements, int n) {
    return make(std::span<const int>(elements.begin(), elements.size()), n);
  }

  /// The interval [lo, hi]; empty when hi < lo.
  static constexpr SetWord interval(int lo, int hi) {
    if (hi < lo) return SetWord{};
    return SetWord{ground_mask(hi) & ~ground_mask(lo - 1)};
  }
  static constexpr SetWord ground(int n) { return SetWord{ground_mask(n)}; }

  static constexpr std::uint64_t ground_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1U; }
  constexpr bool meets(SetWord o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(SetWord o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool within(int n) const { return (bits_ & ~ground_mask(n)) == 0; }

  /// Smallest / largest element, 0 when empty.
  constexpr int min_element() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr int max_element() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  constexpr SetWord with(int e) const { return SetWord{bits_ | (std::uint64_t{1} << (e - 1))}; }
  constexpr SetWord without(int e) const { return SetWord{bits_ & ~(std::uint64_t{1} << (e - 1))}; }

  constexpr SetWord operator|(SetWord o) const { return SetWord{bits_ | o.bits_}; }
  constexpr SetWord operator&(SetWord o) const { return SetWord{bits_ & o.bits_}; }
  constexpr SetWord operator-(SetWord o) const { return SetWord{bits_ & ~o.bits_}; }

  std::vector<int> elements() const;
  /// "1,2,5"; the empty set renders as "{}".
  std::string to_string() const;

  constexpr auto operator<=>(const SetWord&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(SetWord) for every k-subset of [n] in lexicographic order of the sorted tuples.
template <class Fn>
void for_each_ksubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    std::uint64_t bits = 0;
    for (int e : idx) bits |= std::uint64_t{1} << (e - 1);
    fn(SetWord{bits});
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All k-subsets of [n], lexicographic order.
std::vector<SetWord> ksubsets_lex(int n, int k);

}  // namespace crossint
