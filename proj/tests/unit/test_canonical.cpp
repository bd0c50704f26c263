#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crossint/canonical.hpp"
#include "crossint/constructions.hpp"
#include "../oracles.hpp"

using namespace crossint;

namespace {

Family fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SetWord> m;
  for (auto s : sets) m.push_back(SetWord::make(s, n));
  return Family(n, std::move(m));
}

}  // namespace

TEST_CASE("canonical form examples") {
  const CrossPair p(3, 2, 2, fam(3, {{2, 3}}), Family(3));
  const CrossPair q(3, 2, 2, fam(3, {{1, 2}}), Family(3));
  CHECK(canonical_form(p) == canonical_form(q));

  // M^2(7,4,2) with blocks {6,7},{4,5} instead of {1,2},{3,4}
  const CrossPair mt = construct_mt(7, 4, 2, 2);
  const Family g = fam(7, {{6, 7}, {4, 5}});
  const CrossPair moved(7, 4, 2, max_companion(g, 4), g);
  CHECK(canonical_form(mt) == canonical_form(moved));
  CHECK(canonical_form(mt) != canonical_form(construct_mt(7, 4, 2, 3)));
  CHECK_THROWS_AS(canonical_form(construct_mt(11, 4, 2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(construct_mt(8, 4, 2, 2), 7), std::invalid_argument);
  CHECK_NOTHROW(canonical_form(construct_mt(8, 4, 2, 2), 8));
}

TEST_CASE("colors are kept apart") {
  // same union, different coloring
  const CrossPair x(4, 2, 2, fam(4, {{1, 2}}), fam(4, {{1, 3}, {2, 3}}));
  const CrossPair y(4, 2, 2, fam(4, {{1, 3}, {2, 3}}), fam(4, {{1, 2}}));
  CHECK(canonical_form(x) != canonical_form(y));
}

TEST_CASE("canonical form is a complete invariant on small pairs") {
  std::mt19937 rng(5);
  for (int round = 0; round < 60; ++round) {
    const int n = 4 + round % 3;
    std::bernoulli_distribution keep(0.3);
    std::vector<SetWord> f, g;
    for_each_ksubset(n, 2, [&](SetWord s) {
      if (keep(rng)) f.push_back(s);
    });
    for_each_ksubset(n, 3, [&](SetWord s) {
      if (keep(rng)) g.push_back(s);
    });
    const CrossPair p(n, 2, 3, Family(n, f, 2), Family(n, g, 3));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const CrossPair q = relabel(p, perm);
    CHECK(canonical_form(p) == canonical_form(q));

    // a second random pair: equal forms iff the plain oracle finds an isomorphism
    std::vector<SetWord> f2, g2;
    for_each_ksubset(n, 2, [&](SetWord s) {
      if (keep(rng)) f2.push_back(s);
    });
    for_each_ksubset(n, 3, [&](SetWord s) {
      if (keep(rng)) g2.push_back(s);
    });
    const CrossPair r(n, 2, 3, Family(n, f2, 2), Family(n, g2, 3));
    CHECK((canonical_form(p) == canonical_form(r)) ==
          oracle::isomorphic(oracle::from(p.f), oracle::from(p.g), oracle::from(r.f), oracle::from(r.g), n));
  }
}

TEST_CASE("relabel") {
  const std::vector<int> perm{3, 1, 2};
  CHECK(relabel(SetWord::make({1, 2}, 3), perm) == SetWord::make({1, 3}, 3));
  CHECK(relabel(fam(3, {{1}, {2}}), perm) == fam(3, {{1}, {3}}));
}
