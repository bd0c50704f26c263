#include <doctest.h>

#include "crossint/canonical.hpp"
#include "crossint/constructions.hpp"
#include "crossint/exact_count.hpp"
#include "crossint/shifting.hpp"
#include "crossint/transversal.hpp"
#include "../oracles.hpp"

using namespace crossint;

TEST_CASE("star") {
  CHECK(star(5, 2, 1).size() == 4);
  CHECK(star(4, 4, 1).size() == 1);
  CHECK(star(6, 3, 2).size() == 10);
  CHECK(oracle::from(star(6, 3, 2)) == oracle::all_with(6, 3, [](const oracle::Set& s) { return oracle::has(s, 2); }));
  CHECK_THROWS_AS(star(5, 6, 1), std::invalid_argument);
  CHECK_THROWS_AS(star(5, 2, 6), std::invalid_argument);
}

TEST_CASE("hilton milner") {
  CHECK(hilton_milner(7, 3).size() == 13);
  CHECK(hilton_milner(9, 4).size() == 53);
  CHECK(tau(hilton_milner(7, 3)) == 2);
  CHECK(is_intersecting(hilton_milner(9, 4)));
  CHECK_THROWS_AS(hilton_milner(6, 3), std::invalid_argument);
}

TEST_CASE("triangle") {
  const Family k = triangle(7, 3);
  CHECK(oracle::from(k) == oracle::all_with(7, 3, [](const oracle::Set& s) { return oracle::inter(s, 1, 3) >= 2; }));
  CHECK(k.size() == 13);
  CHECK(is_intersecting(k));
  CHECK(tau(k) == 2);
  CHECK_THROWS_AS(triangle(7, 1), std::invalid_argument);
}

TEST_CASE("frankl G") {
  const Family g = frankl_g(15, 7);
  CHECK(g.size() == 2986);
  CHECK(BigCount(g.size()) == bound_cover3(15, 7));
  CHECK(tau(g) == 3);
  CHECK(is_intersecting(g));
  CHECK(frankl_g_blocks(15, 7).size() == 3);
  CHECK(frankl_g(9, 4).size() == 48);
  CHECK(frankl_g(8, 4).size() == 35);
  CHECK_THROWS_AS(frankl_g(7, 4), std::invalid_argument);
}

TEST_CASE("M^t") {
  const CrossPair p = construct_mt(7, 4, 2, 2);
  CHECK(p.total() == 27);
  CHECK(construct_mt(7, 4, 2, 3).total() == 23);
  CHECK(tau(p.g) == 2);
  CHECK(is_cross_intersecting(p));
  for (int n = 4; n <= 8; ++n)
    for (int t = 1; t <= 3; ++t)
      for (int a = t; a <= n; ++a)
        if (t <= n) CHECK(BigCount(construct_mt(n, a, 1, t).total()) == oracle::binom(n - t, a - t) + t);
  const auto [f, g] = oracle::mt(7, 4, 2, 2);
  CHECK(oracle::from(p.f) == f);
  CHECK(oracle::from(p.g) == g);
  CHECK_THROWS_AS(construct_mt(5, 3, 2, 3), std::invalid_argument);
}

TEST_CASE("M_s^t") {
  const CrossPair p = construct_mst(7, 4, 2, 2, 1);
  CHECK(p.total() == 23);
  CHECK(p.f.size() == 16);
  CHECK(p.g.size() == 7);
  CHECK(tau(p.f) == 1);
  CHECK(tau(p.g) >= 2);
  CHECK(is_cross_intersecting(p));
  CHECK(canonical_form(construct_mst(7, 4, 2, 2, 2)) == canonical_form(construct_mt(7, 4, 2, 2)));
  CHECK(canonical_form(construct_mst(8, 4, 2, 3, 2)) == canonical_form(construct_mt(8, 4, 2, 3)));
  CHECK_THROWS_AS(construct_mst(7, 4, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(construct_mst(5, 4, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("H^t and H_s^t") {
  const CrossPair h = construct_ht(7, 4, 2, 2);
  CHECK(h.total() == 25);
  CHECK(h.f.size() == 22);
  CHECK(h.g.size() == 3);
  CHECK(is_initial(h.f));
  CHECK(is_initial(h.g));
  CHECK(tau(h.g) == 2);

  const CrossPair hs = construct_hst(7, 4, 2, 2, 1);
  CHECK(hs.total() == 23);
  CHECK(hs.f.size() == 16);
  CHECK(hs.g.size() == 7);
  CHECK(is_initial(hs.f));
  CHECK(is_initial(hs.g));
  CHECK(construct_hst(8, 5, 3, 2, 3).total() == construct_ht(8, 5, 3, 2).total());
  CHECK(construct_hst(8, 5, 3, 2, 2).total() == 56);
  CHECK(size_ht(9, 5, 2, 3) == construct_ht(9, 5, 2, 3).total());
}

TEST_CASE("every construction is cross-intersecting and matches its predicate") {
  for (int n = 4; n <= 9; ++n)
    for (int b = 1; b <= 3; ++b)
      for (int t = 1; t <= 3; ++t)
        for (int a = t; a <= n - b && a <= 5; ++a) {
          if (t * b <= n) {
            const CrossPair p = construct_mt(n, a, b, t);
            CHECK(is_cross_intersecting(p));
            CHECK(tau(p.g) == t);
          }
          if (b + t - 1 <= n) {
            const CrossPair p = construct_ht(n, a, b, t);
            const auto [f, g] = oracle::ht(n, a, b, t);
            CHECK(oracle::from(p.f) == f);
            CHECK(oracle::from(p.g) == g);
            CHECK(is_cross_intersecting(p));
          }
          for (int s = 1; s <= b; ++s) {
            if (s + (t - 1) * b <= n) {
              const CrossPair p = construct_mst(n, a, b, t, s);
              const auto [f, g] = oracle::mst(n, a, b, t, s);
              CHECK(oracle::from(p.f) == f);
              CHECK(oracle::from(p.g) == g);
              CHECK(is_cross_intersecting(p));
            }
            if (b + t - 1 <= n) {
              const CrossPair p = construct_hst(n, a, b, t, s);
              const auto [f, g] = oracle::hst(n, a, b, t, s);
              CHECK(oracle::from(p.f) == f);
              CHECK(oracle::from(p.g) == g);
              CHECK(is_cross_intersecting(p));
              CHECK(is_initial(p.f));
              CHECK(is_initial(p.g));
            }
          }
        }
}

TEST_CASE("tags and build") {
  CHECK(parse_tag("Mt") == Tag::Mt);
  CHECK(parse_tag("hm") == Tag::HiltonMilner);
  CHECK(tag_name(Tag::Hst) == "Hst");
  CHECK_THROWS_AS(parse_tag("nope"), std::invalid_argument);
  Params p;
  p.n = 7;
  p.a = 4;
  p.b = 2;
  p.t = 2;
  const NamedFamily nf = build(Tag::Mt, p);
  CHECK(std::get<CrossPair>(nf.realized).total() == 27);
  p.t.reset();
  CHECK_THROWS_AS(build(Tag::Mt, p), std::invalid_argument);
}

TEST_CASE("remark companion") {
  const CrossPair p = remark_companion(9, 3, 3, 2);
  CHECK(is_cross_intersecting(p));
  CHECK(p.g.size() == 84 - 35);
}
