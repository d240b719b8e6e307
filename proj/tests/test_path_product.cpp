#include <doctest.h>

#include "coplab/generators.hpp"
#include "coplab/path_product.hpp"

using namespace coplab;

namespace {

FiniteMonoid z2() { return FiniteMonoid::transformation_monoid(2, {{1, 0}}); }

}  // namespace

TEST_CASE("action examples on Z2 x Z2") {
  std::vector<MSet> f{MSet::natural(z2()), MSet::natural(z2())};
  Elem g = f[0].monoid().parse("(0 1)");
  PathPoint x{{0, 0}};
  PathPoint y = path_act(f, 0, g, x);
  CHECK(y == PathPoint{{0, 0}, {1, 0}});
  CHECK(path_act(f, 0, g, y) == x);
  CHECK(path_act(f, 1, f[1].monoid().identity(), y) == y);
  PathPoint z = path_act(f, 1, g, y);
  CHECK(z == PathPoint{{0, 0}, {1, 0}, {1, 1}});
  CHECK(is_path(z, f));
  CHECK_FALSE(is_path(PathPoint{{0, 0}, {1, 1}}, f));
}

TEST_CASE("replacing a final step needs three points") {
  std::vector<MSet> f{MSet::natural(FiniteMonoid::symmetric_group(3)), MSet::natural(z2())};
  const FiniteMonoid& s3 = f[0].monoid();
  PathPoint x{{0, 0}, {1, 0}};
  CHECK(path_act(f, 0, s3.parse("(1 2)"), x) == PathPoint{{0, 0}, {2, 0}});
  CHECK(path_act(f, 0, s3.parse("(0 1)"), x) == PathPoint{{0, 0}});
}

TEST_CASE("phi examples") {
  PathPoint x{{0, 0}, {1, 0}};
  CHECK(phi_j(x, 0) == x);
  CHECK(phi_j(x, 1) == PathPoint{{0, 0}, {1, 0}, {1, 0}});
  CHECK(phi_j_inverse(phi_j(x, 1), 1) == x);
}

TEST_CASE("MSet validation") {
  FiniteMonoid m = z2();
  CHECK_THROWS_AS(MSet(m, 2, {0, 1, 0, 0}), std::invalid_argument);
  CHECK(MSet::natural(m).is_faithful());
}

TEST_CASE("strong faithfulness and closures") {
  MSet s = MSet::natural(FiniteMonoid::symmetric_group(3));
  CHECK(strongly_faithful_up_to(s, 2));
  CHECK_FALSE(strongly_faithful_up_to(s, 4));
  CHECK_FALSE(strongly_faithful_up_to(strong_closure(s, 0).mset, 2));
  auto c2 = strong_closure(s, 2);
  CHECK(c2.mset.points() == 1 + 3 + 9);
  CHECK(strongly_faithful_up_to(c2.mset, 6));
  CHECK(separating_point(c2.mset, {0, 1, 2, 3, 4, 5}).has_value());
}

TEST_CASE("faithful witness examples over S3 u S3") {
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  auto cop = table_coproduct({s3, s3});
  std::vector<MSet> f{strong_closure(MSet::natural(s3), 2).mset,
                      strong_closure(MSet::natural(s3), 2).mset};
  auto w = faithful_witness(cop.parse("A:(0 1)"), cop.parse(""), f);
  REQUIRE(w);
  CHECK(w->gx.size() == 2);
  CHECK(w->hx.size() == 1);
  auto ab = cop.parse("A:(0 1)|B:(1 2)"), ba = cop.parse("B:(1 2)|A:(0 1)");
  auto w2 = faithful_witness(ab, ba, f);
  REQUIRE(w2);
  CHECK(w2->gx != w2->hx);
  CHECK(path_eval(f, ab, w2->x) == w2->gx);
  CHECK(path_eval(f, ba, w2->x) == w2->hx);
  auto w3 = faithful_witness(cop.parse("A:(0 1)"), cop.parse("A:(0 2)"), f);
  REQUIRE(w3);
  CHECK(w3->gx != w3->hx);
  CHECK_THROWS_AS(faithful_witness(ab, ab, f), std::invalid_argument);
}

TEST_CASE("non-cancellative factor: adc and bdc collide") {
  FiniteMonoid m1 = FiniteMonoid::transformation_monoid(2, {{1, 0}, {1, 1}, {0, 0}});
  CHECK_FALSE(right_cancellative(m1));
  CHECK(right_cancellative(FiniteMonoid::symmetric_group(3)));
  // a swaps, b and c are the constants 1 and 0: a c = b c = constant 1.
  Elem a = m1.parse("(0 1)"), b = m1.parse("{0:1}"), c = m1.parse("{1:0}");
  REQUIRE(m1.mul(a, c) == m1.mul(b, c));
  REQUIRE(a != b);
  FiniteMonoid m2 = z2();
  auto cop = table_coproduct({m1, m2});
  Elem d = m2.parse("(0 1)");
  TableWord adc = cop.reduce({{0, a}, {1, d}, {0, c}});
  TableWord bdc = cop.reduce({{0, b}, {1, d}, {0, c}});
  REQUIRE(adc != bdc);
  std::vector<MSet> f{strong_closure(MSet::natural(m1), 2).mset,
                      strong_closure(MSet::natural(m2), 2).mset};
  for (const auto& x : enumerate_paths(f, 3)) CHECK(path_eval(f, adc, x) == path_eval(f, bdc, x));
  CHECK_FALSE(faithful_witness(adc, bdc, f).has_value());
}

TEST_CASE("property: evaluation ignores reduction") {
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  std::vector<FiniteMonoid> ms{s3, z2()};
  std::vector<MSet> f{MSet::natural(s3), MSet::natural(z2())};
  auto cop = table_coproduct(ms);
  auto paths = enumerate_paths(f, 3);
  Rng rng(83);
  for (int s = 0; s < 100; ++s) {
    auto raw = random_raw_table_word(rng, ms, uniform(rng, 0, 6));
    auto red = cop.reduce(raw);
    const auto& x = paths[uniform(rng, 0, paths.size() - 1)];
    CHECK(path_eval(f, raw, x) == path_eval(f, red, x));
  }
}

TEST_CASE("property: random distinct words are separated at depth 2") {
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  std::vector<FiniteMonoid> ms{s3, s3};
  auto cop = table_coproduct(ms);
  std::vector<MSet> f{strong_closure(MSet::natural(s3), 2).mset,
                      strong_closure(MSet::natural(s3), 2).mset};
  Rng rng(89);
  for (int s = 0; s < 200; ++s) {
    auto g = random_table_word(rng, cop, ms, uniform(rng, 0, 6));
    auto h = random_table_word(rng, cop, ms, uniform(rng, 0, 6));
    if (g == h) continue;
    auto w = faithful_witness(g, h, f);
    REQUIRE(w);
    CHECK(w->x.size() == 1);
    CHECK(path_eval(f, g, w->x) != path_eval(f, h, w->x));
  }
}
