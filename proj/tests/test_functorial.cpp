#include <doctest.h>

#include "coplab/functorial.hpp"
#include "coplab/generators.hpp"
#include "coplab/partition.hpp"

using namespace coplab;

namespace {

// Smallest separator size by brute force over subsets of the union.
std::size_t min_separator_size(const std::vector<FinSubset>& rs) {
  FinSubset uni;
  for (const auto& r : rs) uni.insert(r.begin(), r.end());
  std::vector<Point> pts(uni.begin(), uni.end());
  std::size_t best = pts.size() + 1;
  for (std::uint32_t mask = 0; mask < (1u << pts.size()); ++mask) {
    FinSubset s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (mask >> i & 1) s.insert(pts[i]);
    }
    if (separates(s, rs)) best = std::min(best, s.size());
  }
  return best;
}

}  // namespace

TEST_CASE("separator examples") {
  std::vector<FinSubset> rs{{0, 2}, {0, 3}, {}};
  FinSubset s = find_separator(rs);
  CHECK(separates(s, rs));
  CHECK(s.size() == 2);
  CHECK(find_separator({{5}}).empty());
  CHECK(find_separator({{}, {1}}) == FinSubset{1});
  CHECK_THROWS_AS(find_separator({{1}, {1}}), std::invalid_argument);
}

TEST_CASE("property: separators are minimal") {
  Rng rng(41);
  for (int s = 0; s < 200; ++s) {
    std::set<FinSubset> distinct;
    std::size_t k = uniform(rng, 1, 5);
    while (distinct.size() < k) distinct.insert(random_subset(rng, 6));
    std::vector<FinSubset> rs(distinct.begin(), distinct.end());
    FinSubset sep = find_separator(rs);
    CHECK(separates(sep, rs));
    CHECK(sep.size() == min_separator_size(rs));
  }
}

TEST_CASE("free tuple examples") {
  auto w = verify_free_tuple({{0}, {1}}, {0, 1}, {1, 0});
  CHECK(w.projected_v != w.projected_w);
  auto w2 = verify_free_tuple({{0, 2}, {0, 3}}, {0, 0}, {1, 1});
  CHECK(separates(w2.s, {{0, 2}, {0, 3}}));
  CHECK(w2.projected_v != w2.projected_w);
  CHECK_THROWS_AS(verify_free_tuple({{0}, {1}}, {0}, {0}), std::invalid_argument);
}

TEST_CASE("restriction examples") {
  CHECK(restrict_cs({0, 5}, {0, 1}) == FinSubset{0});
  CHECK(restrict_cs({}, {3, 4}).empty());
  CHECK(restrict_cs({2, 3}, {2, 3}) == FinSubset{2, 3});
}

TEST_CASE("e_s codes are injective") {
  FinSubset s{1, 4, 6};
  auto subs = enumerate_es(s);
  CHECK(subs.size() == 8);
  std::set<FinSubset> seen(subs.begin(), subs.end());
  CHECK(seen.size() == 8);
  for (std::size_t c = 0; c < subs.size(); ++c) CHECK(es_code(s, subs[c]) == c);
  CHECK_THROWS_AS(es_code(s, {2}), std::invalid_argument);
}

TEST_CASE("left inverse examples") {
  auto l = left_inverse(std::vector<char>{'p', 'q'});
  CHECK(l('p') == 0);
  CHECK(l('q') == 1);
  CHECK(l('z') == 0);
  auto one = left_inverse(std::vector<int>{7});
  CHECK(one(7) == 0);
  CHECK(one(8) == 0);
}

TEST_CASE("diagonal function examples") {
  CHECK(diagonal_fn(3, 5) == 2);
  CHECK(diagonal_fn(3, 1) == 1);
  CHECK(diagonal_fn(1, 9) == 0);
}

TEST_CASE("cut examples") {
  CHECK(rational_cuts({0, 1, 2}) == std::vector<Rational>{1, 2});
  CHECK(rational_cuts({5}).empty());
  CHECK(rational_cuts({Rational(1, 2), Rational(3, 4)}) == std::vector<Rational>{Rational(3, 4)});
  std::vector<Rational> s{1, 2};
  CHECK(cut_map_as(s, Rational(3, 2)) == 1);
  CHECK(cut_map_as(s, Rational(1, 2)) == 0);
  CHECK(cut_map_as(s, 2) == 2);
  CHECK(section_b({0, 1, 2}, 1) == 1);
  CHECK(section_b({0, 1, 2}, 9) == 2);
}

TEST_CASE("property: a_s o b is the identity on indices") {
  Rng rng(43);
  for (int s = 0; s < 100; ++s) {
    std::set<Rational> pts;
    std::size_t k = uniform(rng, 2, 6);
    while (pts.size() < k) {
      Rational q(static_cast<long>(uniform(rng, 0, 40)), 7);
      q.canonicalize();
      pts.insert(q);
    }
    std::vector<Rational> reals(pts.begin(), pts.end());
    auto cuts = rational_cuts(reals);
    for (std::size_t i = 1; i + 1 <= reals.size(); ++i) {
      if (i < reals.size()) CHECK(cut_map_as(cuts, section_b(reals, i)) == i);
    }
    // a_s is isotone.
    for (std::size_t i = 1; i < reals.size(); ++i) {
      CHECK(cut_map_as(cuts, reals[i - 1]) <= cut_map_as(cuts, reals[i]));
    }
  }
}

TEST_CASE("min monoid examples") {
  using M = MinMonoidElem;
  CHECK(min_monoid_op(M::gen(2), M::gen(5)) == M::gen(2));
  CHECK(min_monoid_op(M::one(), M::gen(3)) == M::gen(3));
  CHECK(min_monoid_op(M::gen(3), M::gen(3)) == M::gen(3));
  std::vector<std::uint64_t> id{0, 1, 2, 3};
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(min_monoid_functor(id, M::gen(i)) == M::gen(i));
  CHECK(min_monoid_functor(id, M::one()) == M::one());
  CHECK_THROWS_AS(min_monoid_functor({1, 0}, M::gen(0)), std::invalid_argument);
}

TEST_CASE("property: isotone maps give monoid homomorphisms") {
  Rng rng(47);
  for (int s = 0; s < 200; ++s) {
    std::vector<std::uint64_t> a(5);
    std::uint64_t cur = 0;
    for (auto& v : a) v = cur += uniform(rng, 0, 2);
    REQUIRE(is_isotone(a));
    MinMonoidElem x = coin(rng) ? MinMonoidElem::one() : MinMonoidElem::gen(uniform(rng, 0, 4));
    MinMonoidElem y = coin(rng) ? MinMonoidElem::one() : MinMonoidElem::gen(uniform(rng, 0, 4));
    CHECK(min_monoid_functor(a, min_monoid_op(x, y)) ==
          min_monoid_op(min_monoid_functor(a, x), min_monoid_functor(a, y)));
  }
}

TEST_CASE("diagonal separators") {
  CHECK(diagonal_separator_free({0, 1}, {1, 0}, 4).has_value());
  CHECK_FALSE(diagonal_separator_free({0, 1}, {0, 1}, 4).has_value());
  CHECK(diagonal_separator_min({2}, {5}, 8).has_value());
}

TEST_CASE("Eq product embedding examples") {
  Partition a = Partition::generated(3, {{0, 1}});
  CHECK(eq_product_embed({a}) == a);
  CHECK(eq_product_embed({Partition::indiscrete(2), Partition::indiscrete(2)}) ==
        Partition::indiscrete(4));
  CHECK(eq_product_embed({Partition::discrete(3), Partition::discrete(3)}) ==
        Partition::discrete(9));
  CHECK_THROWS_AS(eq_product_embed({Partition::discrete(2), Partition::discrete(3)}),
                  std::invalid_argument);
}

TEST_CASE("property: Eq product embedding preserves meets and order") {
  auto parts = enumerate_partitions(3);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      for (const auto& c : parts) {
        for (const auto& d : parts) {
          Partition x = eq_product_embed({a, b}), y = eq_product_embed({c, d});
          CHECK(eq_meet(x, y) == eq_product_embed({eq_meet(a, c), eq_meet(b, d)}));
          CHECK(eq_leq(x, y) == (eq_leq(a, c) && eq_leq(b, d)));
        }
      }
    }
  }
}
