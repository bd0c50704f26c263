#include <doctest.h>

#include <random>

#include "crossint/constructions.hpp"
#include "crossint/shifting.hpp"
#include "crossint/transversal.hpp"
#include "../oracles.hpp"

using namespace crossint;

namespace {

Family fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SetWord> m;
  for (auto s : sets) m.push_back(SetWord::make(s, n));
  return Family(n, std::move(m));
}

}  // namespace

TEST_CASE("shift_ij examples") {
  CHECK(shift_ij(fam(3, {{2, 3}}), 1, 2) == fam(3, {{1, 3}}));
  CHECK(shift_ij(fam(3, {{1, 3}, {2, 3}}), 1, 2) == fam(3, {{1, 3}, {2, 3}}));
  CHECK(shift_ij(fam(3, {{1, 2}}), 1, 2) == fam(3, {{1, 2}}));
  CHECK_THROWS_AS(shift_ij(fam(3, {{1, 2}}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(fam(3, {{1, 2}}), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(fam(3, {{1, 2}}), 1, 4), std::invalid_argument);
  std::size_t moved = 0;
  shift_ij(fam(4, {{2, 3}, {2, 4}, {1, 3}}), 1, 2, moved);
  CHECK(moved == 1);
}

TEST_CASE("compress_to_initial") {
  const CompressResult r = compress_to_initial(fam(3, {{2, 3}}));
  CHECK(r.family == fam(3, {{1, 2}}));
  CHECK(r.log == ShiftLog{{1, 2, 1}, {2, 3, 1}});
  CHECK(compress_to_initial(star(6, 3, 1)).family == star(6, 3, 1));
  CHECK(compress_to_initial(star(6, 3, 1)).log.empty());
  CHECK(compress_to_initial(Family(4)).family.empty());
}

TEST_CASE("is_initial") {
  CHECK(is_initial(Family::complete(4, 3)));
  CHECK(is_initial(construct_ht(7, 4, 2, 2).g));
  CHECK_FALSE(is_initial(fam(3, {{2, 3}})));
  CHECK(is_initial(Family(3)));
}

TEST_CASE("compress_pair") {
  const CrossPair p(5, 3, 2, fam(5, {{2, 3, 4}}), fam(5, {{2, 5}}));
  const PairCompressResult r = compress_pair(p);
  CHECK(r.pair.f == fam(5, {{1, 2, 3}}));
  CHECK(r.pair.g == fam(5, {{1, 2}}));
  CHECK(is_initial(r.pair.f));
  CHECK(is_initial(r.pair.g));
  CHECK(is_cross_intersecting(r.pair));

  const CrossPair init = construct_ht(7, 4, 2, 2);
  CHECK(compress_pair(init).pair == init);
  CHECK(compress_pair(init).log.empty());

  const CrossPair lone(4, 2, 2, Family(4), fam(4, {{3, 4}}));
  CHECK(compress_pair(lone).pair.g == fam(4, {{1, 2}}));

  CHECK_THROWS_AS(compress_pair(CrossPair(4, 2, 2, fam(4, {{1, 2}}), fam(4, {{3, 4}}))),
                  std::invalid_argument);

  // stop once tau(G) drops to 1
  const CrossPair mt = construct_mt(7, 4, 2, 2);
  const PairCompressResult stopped = compress_pair(mt, [](const CrossPair& q) { return tau(q.g) == 1; });
  CHECK(stopped.stopped_early);
  CHECK(tau(stopped.pair.g) == 1);
  CHECK(is_cross_intersecting(stopped.pair));
  const PairCompressResult at_start = compress_pair(mt, [](const CrossPair&) { return true; });
  CHECK(at_start.stopped_early);
  CHECK(at_start.log.empty());
}

TEST_CASE("shifting can lower tau") {
  // Stored witness: two disjoint edges.
  const Family f = fam(4, {{1, 2}, {3, 4}});
  CHECK(tau(f) == 2);
  CHECK(tau(shift_ij(f, 1, 3)) == 1);
}

TEST_CASE("shifting agrees with the set oracle") {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    const int n = 4 + round % 5, k = 1 + round % 3;
    std::bernoulli_distribution keep(0.35);
    std::vector<SetWord> m;
    for_each_ksubset(n, k, [&](SetWord s) {
      if (keep(rng)) m.push_back(s);
    });
    const Family f(n, m, k);
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const int j = i + 1 + static_cast<int>(rng() % (n - i));
    CHECK(oracle::from(shift_ij(f, i, j)) == oracle::shift(oracle::from(f), i, j));
    const Family c = compress_to_initial(f).family;
    CHECK(oracle::initial(oracle::from(c), n));
    CHECK(is_initial(c) == oracle::initial(oracle::from(c), n));
    CHECK(is_initial(f) == oracle::initial(oracle::from(f), n));
  }
}
