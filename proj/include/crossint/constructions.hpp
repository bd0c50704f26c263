#pragma once

#include <optional>
#include <string>
#include <variant>

#include "crossint/family.hpp"

namespace crossint {

// Named extremal families. Disjoint blocks are placed as consecutive
// intervals. Validity gates check placement feasibility only; theorem
// hypotheses are the caller's business. All constructors throw
// std::invalid_argument on bad parameters.

enum class Tag { Star, HiltonMilner, Triangle, FranklG, Mt, Mst, Ht, Hst, CompleteUniform };

struct Params {
  int n = 0;
  int a = 0;  // also k for the single-family constructions
  int b = 0;
  std::optional<int> t;
  std::optional<int> s;
  std::optional<int> i;  // star centre
};

struct NamedFamily {
  Tag tag;
  Params params;
  std::variant<Family, CrossPair> realized;
};

std::string tag_name(Tag tag);
/// Accepts the names printed by tag_name, case-insensitively; throws otherwise.
Tag parse_tag(const std::string& name);

/// S_i(n,k): all k-sets containing i.
Family star(int n, int k, int i);
/// H(n,k), needs n > 2k >= 4.
Family hilton_milner(int n, int k);
/// K(n,k) = { F : |F cap [3]| >= 2 }, k >= 2.
Family triangle(int n, int k);
/// G(n,k) = A cup B with B = { [2,k+1], {2} cup [k+2,2k], {3} cup [k+2,2k] }
/// and A the k-sets through 1 meeting all of B. Needs n >= 2k, k >= 3.
Family frankl_g(int n, int k);
/// The three-set part B of frankl_g.
Family frankl_g_blocks(int n, int k);

/// M^t(n,a,b): G = t disjoint b-blocks [(i-1)b+1, ib], F = D_a(G).
CrossPair construct_mt(int n, int a, int b, int t);
/// M_s^t(n,a,b): G = { B : [s] subset B } cup { D_1..D_{t-1} },
/// D_i = [s+(i-1)b+1, s+ib]; F = D_a(G).
CrossPair construct_mst(int n, int a, int b, int t, int s);
/// H^t(n,a,b): F = { A : |A cap [b+t-1]| >= t }, G = C([b+t-1], b).
CrossPair construct_ht(int n, int a, int b, int t);
/// H_s^t(n,a,b): F = { A : A cap [s] != 0, |A cap [b+t-1]| >= t },
/// G = { B : [s] subset B } cup C([b+t-1], b).
CrossPair construct_hst(int n, int a, int b, int t, int s);

/// A' and B' around a fixed t-set B = [t]: B' = b-sets meeting [t],
/// A' = D_a(B'). Used to probe the a < b+t-1 regime; no optimality claim.
CrossPair remark_companion(int n, int a, int b, int t);

NamedFamily build(Tag tag, const Params& p);

}  // namespace crossint
