#include <doctest.h>

#include <random>

#include "crossint/constructions.hpp"
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

TEST_CASE("is_cover") {
  CHECK(is_cover(fam(4, {{1, 2}, {3, 4}}), SetWord::make({1, 3}, 4)));
  CHECK_FALSE(is_cover(fam(4, {{1, 2}, {3, 4}}), SetWord::make({1}, 4)));
  CHECK(is_cover(Family(4), SetWord{}));
}

TEST_CASE("tau examples") {
  CHECK(tau(fam(6, {{1, 2}, {3, 4}, {5, 6}})) == 3);
  CHECK(tau(star(5, 2, 1)) == 1);
  CHECK(tau(Family::complete(4, 2)) == 3);
  CHECK(tau(Family(5)) == 0);
  const Family with_empty = restrict_trace(fam(3, {{1, 2}}), SetWord::make({1, 2}, 3));
  CHECK_THROWS_AS(tau(with_empty), std::domain_error);
  const TauResult r = tau_detailed(Family::complete(5, 3));
  CHECK(r.tau == 3);
  CHECK(is_cover(Family::complete(5, 3), r.witness.cover));
  CHECK(r.witness.size == 3);
}

TEST_CASE("transversals of size i") {
  CHECK(transversals_of_size(fam(3, {{1, 2}, {1, 3}}), 1) == fam(3, {{1}}));
  CHECK(transversals_of_size(fam(4, {{1, 2}, {3, 4}}), 1).empty());
  CHECK(transversals_of_size(fam(4, {{1, 2}, {3, 4}}), 2) == fam(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(transversals_of_size(Family(3), 0).size() == 1);
  CHECK_THROWS_AS(transversals_of_size(fam(3, {{1}}), 4), std::invalid_argument);
}

TEST_CASE("tau agrees with the exhaustive oracle") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + round % 8;
    const int k = 1 + static_cast<int>(rng() % std::min(n, 4));
    std::bernoulli_distribution keep(0.1 + 0.05 * (round % 6));
    std::vector<SetWord> m;
    for_each_ksubset(n, k, [&](SetWord s) {
      if (keep(rng)) m.push_back(s);
    });
    const Family f(n, m, k);
    const int t = tau(f);
    CHECK(t == oracle::tau(oracle::from(f), n));
    if (!f.empty()) {
      CHECK(t <= n - k + 1);
      CHECK(has_cover_within(f, t));
      CHECK_FALSE(has_cover_within(f, t - 1));
      CHECK_FALSE(transversals_of_size(f, t).empty());
      if (t > 0) CHECK(transversals_of_size(f, t - 1).empty());
      // every size-t cover really covers, and the oracle count matches
      std::size_t count = 0;
      for (const auto& s : oracle::ksets(n, t))
        if (std::all_of(f.begin(), f.end(), [&](SetWord x) { return x.meets(SetWord::make(s, n)); }))
          ++count;
      CHECK(transversals_of_size(f, t).size() == count);
    }
  }
}

TEST_CASE("cross pair covering bound") {
  const CrossPair p = construct_mt(7, 4, 2, 2);
  CHECK(tau(p.f) <= p.b);
  CHECK(tau(p.g) <= p.a);
  // b-uniform, tau >= t witnessed by t disjoint members: at most b^t covers
  CHECK(transversals_of_size(p.g, 2).size() <= 4);
}
