#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossint/canonical.hpp"
#include "crossint/exact_count.hpp"
#include "crossint/family.hpp"

namespace crossint {

struct TauConstraint {
  enum class Kind { AtLeast, Exactly };
  Kind kind = Kind::AtLeast;
  int value = 0;

  static TauConstraint at_least(int v) { return {Kind::AtLeast, v}; }
  static TauConstraint exactly(int v) { return {Kind::Exactly, v}; }

  bool admits(int tau) const { return kind == Kind::AtLeast ? tau >= value : tau == value; }
  std::string to_string() const;
  bool operator==(const TauConstraint&) const = default;
};

struct ConstraintSpec {
  TauConstraint f;
  TauConstraint g;
  bool initial_only = false;
  bool operator==(const ConstraintSpec&) const = default;
};

/// Instance-size gates. Configuration, not facts.
struct Guardrails {
  int max_b_sets = 26;            // C(n,b) for the unrestricted DFS
  int max_initial_n = 12;         // n for initial_only mode
  int max_a_sets = 4096;          // C(n,a)
  int max_canon_n = kDefaultCanonLimit;
  int max_intersecting_sets = 40; // C(n,k) for the intersecting search
};

struct SearchOptions {
  int threads = 0;               // 0: OpenMP default
  bool force = false;            // skip the guardrails
  std::size_t witness_cap = 64;
  bool anchor = true;            // fix [b] in G when G must be nonempty
  int split_depth = 10;          // DFS decisions expanded before going parallel
  std::size_t record_cap = std::size_t{1} << 20;
  Guardrails guard;
};

struct IsoClass {
  CanonicalForm form;
  std::size_t labelled = 0;  // optimal labelled pairs found in this class
};

struct SearchReport {
  int n = 0, a = 0, b = 0;
  ConstraintSpec spec;
  std::optional<BigCount> optimum;  // empty when nothing satisfies the constraints
  std::optional<BigCount> bound;
  std::string bound_source;
  bool bound_matched = false;
  std::vector<CrossPair> witnesses;  // canonical-form order, capped
  std::vector<IsoClass> classes;     // sorted by form
  std::size_t iso_class_count = 0;
  bool classes_complete = true;
  std::optional<bool> iso_matches_construction;
  std::string reference;
  std::size_t optimal_labelled = 0;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

/// Applicable closed-form bound for these constraints at (n,a,b), when a theorem's
/// hypotheses hold. source names it ("bound_1t", "bound_st", "size_ht", ...).
std::optional<BigCount> theorem_bound(int n, int a, int b, const ConstraintSpec& spec,
                                      std::string* source = nullptr);
/// The construction that should be the unique optimum (n > a+b only).
std::optional<CrossPair> theorem_construction(int n, int a, int b, const ConstraintSpec& spec,
                                              std::string* name = nullptr);

/// Exact maximum of |F|+|G| over cross-intersecting F (a-uniform), G
/// (b-uniform) on [n] under the tau constraints. Throws
/// std::invalid_argument on contradictory constraints or, without force,
/// on instances past the guardrails.
SearchReport max_cross_sum(int n, int a, int b, const ConstraintSpec& spec,
                           const SearchOptions& opt = {});

/// m(n,k,s) at this n. Witnesses are pairs with an empty G-part.
SearchReport max_intersecting_with_tau(int n, int k, int s, const SearchOptions& opt = {});

struct MaximalPairs {
  std::vector<CrossPair> classes;  // one representative per iso class, canonical order
  std::vector<CanonicalForm> forms;
  std::size_t labelled = 0;        // number of labelled fixed points
};

/// All pairs with F = D_a(G) and G = D_b(F), up to isomorphism.
MaximalPairs enumerate_maximal_pairs(int n, int a, int b, const SearchOptions& opt = {});

namespace reference {

/// Serial brute force over every G subset of C([n],b), no pruning and no
/// anchoring, built on the Family-level operations. Small instances only.
SearchReport max_cross_sum(int n, int a, int b, const ConstraintSpec& spec);

/// Serial brute force over every k-family; C(n,k) <= 24 or so.
SearchReport max_intersecting_with_tau(int n, int k, int s);

}  // namespace reference

}  // namespace crossint
