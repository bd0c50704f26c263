#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "crossint/set_word.hpp"

namespace crossint {

/// A family of subsets of [n], stored sorted by bitmask with no duplicates.
///
/// Uniformity is the common member size when there is one. It is recorded
/// when passed explicitly (and then validated) or inferred from a nonempty
/// family whose members all share a size. Mixed families report the size
/// profile instead.
class Family {
 public:
  explicit Family(int n = 0);

  /// Sorts and removes duplicates. Throws std::invalid_argument when n is
  /// outside [0, 64], a member is not inside [n], or a member violates the
  /// requested uniformity.
  Family(int n, std::vector<SetWord> members, std::optional<int> uniformity = std::nullopt);

  /// Like the constructor but rejects duplicate members instead of merging them.
  static Family from_distinct(int n, std::vector<SetWord> members,
                              std::optional<int> uniformity = std::nullopt);

  /// All k-subsets of [n].
  static Family complete(int n, int k);

  int n() const { return n_; }
  std::optional<int> uniformity() const { return uniformity_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const SetWord> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const SetWord& operator[](std::size_t i) const { return members_[i]; }

  bool contains(SetWord s) const;
  bool contains_empty_set() const { return !members_.empty() && members_.front().empty(); }

  /// member size -> count
  std::map<int, std::size_t> size_profile() const;

  /// Union of all members.
  SetWord support() const;

  template <class Pred>
  Family filter(Pred&& keep) const {
    std::vector<SetWord> out;
    for (SetWord s : members_)
      if (keep(s)) out.push_back(s);
    return Family(n_, std::move(out), uniformity_);
  }

  bool operator==(const Family& o) const {
    return n_ == o.n_ && members_ == o.members_;
  }

 private:
  struct Sorted {};
  Family(Sorted, int n, std::vector<SetWord> members, std::optional<int> uniformity);

  int n_ = 0;
  std::optional<int> uniformity_;
  std::vector<SetWord> members_;
};

/// An ordered pair (F a-uniform, G b-uniform) over the same ground set.
struct CrossPair {
  int n = 0;
  int a = 1;
  int b = 1;
  Family f;
  Family g;

  CrossPair() = default;
  /// Validates n, a >= 1, b >= 1 and the uniformity of both parts.
  CrossPair(int n, int a, int b, Family f, Family g);

  std::size_t total() const { return f.size() + g.size(); }
  bool operator==(const CrossPair&) const = default;
};

// Derived families. The names follow the usual link / avoid notation:
// F(A), F(B-bar), F(A, B-bar), and the trace F~(T).

/// { F \ A : A subset of F in family }.
Family sub_family_link(const Family& f, SetWord a);
/// Members disjoint from b.
Family sub_family_avoid(const Family& f, SetWord b);
/// { F \ A : A subset of F, F disjoint from B }. Throws when A and B meet.
Family sub_family_link_avoid(const Family& f, SetWord a, SetWord b);
/// { F \ T : F in family }, deduplicated; may contain the empty set.
Family restrict_trace(const Family& f, SetWord t);
/// All target-subsets of [n] containing a member. Requires a uniform family.
Family upper_shadow(const Family& f, int target);

bool is_cross_intersecting(const Family& f, const Family& g);
bool is_cross_intersecting(const CrossPair& p);
bool is_intersecting(const Family& f);

/// D_a(G): every a-subset of [n] meeting all members of G.
Family max_companion(const Family& g, int a);

}  // namespace crossint
