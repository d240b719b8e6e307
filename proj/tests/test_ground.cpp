#include <set>

#include <doctest.h>

#include "coplab/generators.hpp"
#include "coplab/ground.hpp"

using namespace coplab;

namespace {

FinSuppEndo map_of(std::vector<FinSuppEndo::Entry> pairs) {
  return FinSuppEndo::from_pairs(std::move(pairs));
}

// Dense oracle on a window large enough to hold both supports.
std::vector<Point> dense(const FinSuppEndo& f, Point window) {
  std::vector<Point> out(window);
  for (Point p = 0; p < window; ++p) {
    Point q = p;
    for (const auto& [k, v] : f.exceptions()) {
      if (k == p) q = v;
    }
    out[p] = q;
  }
  return out;
}

}  // namespace

TEST_CASE("eval examples") {
  CHECK(eval(FinSuppEndo{}, 7) == 7);
  CHECK(eval(map_of({{0, 1}, {1, 0}}), 0) == 1);
  CHECK(eval(map_of({{0, 1}, {1, 2}}), 1) == 2);
}

TEST_CASE("compose examples") {
  FinSuppEndo swap = map_of({{0, 1}, {1, 0}});
  FinSuppEndo g = map_of({{3, 1}, {4, 4}});
  CHECK(compose(FinSuppEndo{}, g) == g);
  CHECK(compose(swap, swap).is_identity());
  CHECK(compose(map_of({{1, 2}}), map_of({{0, 1}})) == map_of({{0, 2}, {1, 2}}));
}

TEST_CASE("identity entries are dropped and repeated keys rejected") {
  CHECK(map_of({{2, 2}}).is_identity());
  CHECK_THROWS_AS(map_of({{0, 1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("permutation examples") {
  CHECK(is_permutation(map_of({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_permutation(map_of({{0, 1}})));
  CHECK(is_permutation(FinSuppEndo{}));
  CHECK_THROWS_AS(inverse(map_of({{0, 1}})), std::invalid_argument);
}

TEST_CASE("block product embedding examples") {
  FinSuppEndo swap01 = FinSuppEndo::transposition(0, 1);
  FinSuppEndo swap23 = FinSuppEndo::transposition(2, 3);
  CHECK(block_product_embed({{0, 1}, {2, 3}}, {swap01, FinSuppEndo{}}) == swap01);
  CHECK(block_product_embed({{0, 1}, {2, 3}}, {FinSuppEndo{}, FinSuppEndo{}}).is_identity());
  CHECK(block_product_embed({{0, 1}, {2, 3}}, {swap01, swap23}) ==
        compose(swap01, swap23));
}

TEST_CASE("level involution examples") {
  auto t = LevelInvolution::from_pairs({{{0, 0}, {0, 1}}});
  CHECK(t({0, 0}) == LevelPoint{0, 1});
  CHECK(t({5, 3}) == LevelPoint{5, 3});
  CHECK_THROWS_AS(LevelInvolution::from_pairs({{{0, 0}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(LevelInvolution::from_pairs({{{0, 0}, {0, 1}}, {{0, 1}, {0, 2}}}),
                  std::invalid_argument);
}

TEST_CASE("property: compose matches the dense oracle and is associative") {
  Rng rng(11);
  for (int s = 0; s < 300; ++s) {
    bool perm = coin(rng);
    FinSuppEndo f = random_endo(rng, 6, perm), g = random_endo(rng, 6, perm),
                h = random_endo(rng, 6, perm);
    auto df = dense(f, 6), dg = dense(g, 6), fg = dense(compose(f, g), 6);
    for (Point p = 0; p < 6; ++p) CHECK(fg[p] == df[dg[p]]);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    if (perm) {
      CHECK(compose(f, inverse(f)).is_identity());
      CHECK(compose(inverse(f), f).is_identity());
    }
    CHECK(parse_endo(to_string(f)) == f);
  }
}

TEST_CASE("property: involutions square to the identity") {
  Rng rng(5);
  for (int s = 0; s < 100; ++s) {
    std::vector<LevelInvolution::Pair> pairs;
    std::set<LevelPoint> used;
    for (int i = 0; i < 4; ++i) {
      LevelPoint a{static_cast<Point>(uniform(rng, 0, 4)),
                   static_cast<std::uint32_t>(uniform(rng, 0, 3))};
      LevelPoint b{static_cast<Point>(uniform(rng, 0, 4)),
                   static_cast<std::uint32_t>(uniform(rng, 0, 3))};
      if (a == b || used.count(a) || used.count(b)) continue;
      used.insert(a);
      used.insert(b);
      pairs.emplace_back(a, b);
    }
    auto t = LevelInvolution::from_pairs(pairs);
    for (Point p = 0; p < 5; ++p) {
      for (std::uint32_t k = 0; k < 4; ++k) CHECK(t(t({p, k})) == LevelPoint{p, k});
    }
  }
}
