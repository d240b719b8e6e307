#include <doctest.h>

#include "coplab/generators.hpp"
#include "coplab/relation.hpp"

using namespace coplab;

namespace {

RelMat rel(std::uint32_t n, std::vector<std::pair<Point, Point>> pairs) {
  return RelMat::from_pairs(n, pairs);
}

// (q,p) in x o y iff (q,r) in x and (r,p) in y for some r.
RelMat compose_oracle(const RelMat& x, const RelMat& y) {
  RelMat out(x.n());
  for (Point q = 0; q < x.n(); ++q) {
    for (Point p = 0; p < x.n(); ++p) {
      for (Point r = 0; r < x.n(); ++r) {
        if (x.has(q, r) && y.has(r, p)) out.set(q, p);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("composition examples") {
  CHECK(rel_compose(rel(3, {{0, 1}}), rel(3, {{1, 2}})) == rel(3, {{0, 2}}));
  RelMat x = rel(3, {{0, 1}, {2, 2}});
  CHECK(rel_compose(RelMat::identity(3), x) == x);
  CHECK(rel_compose(x, RelMat::identity(3)) == x);
  CHECK(rel_compose(RelMat(3), x) == RelMat(3));
}

TEST_CASE("property: composition matches the oracle") {
  Rng rng(97);
  for (int s = 0; s < 300; ++s) {
    std::uint32_t n = static_cast<std::uint32_t>(uniform(rng, 1, 6));
    RelMat x = random_rel(rng, n), y = random_rel(rng, n);
    CHECK(rel_compose(x, y) == compose_oracle(x, y));
    CHECK(parse_rel(n, to_string(x)) == x);
  }
}

TEST_CASE("two-class examples") {
  auto r4 = two_class_identity_check(4);
  CHECK(r4.partitions == 7);
  CHECK(r4.ordered_pairs == 42);
  CHECK(r4.ok());
  auto r3 = two_class_identity_check(3);
  CHECK(r3.partitions == 3);
  CHECK(r3.ordered_pairs == 6);
  CHECK(r3.ok());
  CHECK(two_class_identity_check(5).ok());
  RelMat y = RelMat::from_partition(Partition({0, 0, 1, 1}));
  RelMat y3 = rel_compose(rel_compose(y, y), y);
  CHECK(y3 == y);
  CHECK(y3 != RelMat::full(4));
  auto chain = two_class_chain(4);
  CHECK(chain.strictly_increasing);
  CHECK(chain.membership_ok);
}

TEST_CASE("idempotent box examples") {
  CHECK(idempotent_box(3, 1, 1) == rel(3, {{0, 0}}));
  RelMat b = idempotent_box(3, 0b011, 0b110);
  CHECK(rel_compose(b, b) == b);
  CHECK_THROWS_AS(idempotent_box(3, 0b001, 0b010), std::invalid_argument);
}

TEST_CASE("theta examples") {
  RelMat t0 = theta_pfim(RelMat(2));
  for (Point t = 0; t < 4; ++t) {
    for (Point s = 0; s < 4; ++s) CHECK(t0.has(t, s) == (t == 0));
  }
  RelMat tid = theta_pfim(RelMat::identity(2));
  for (Point t = 0; t < 4; ++t) {
    for (Point s = 0; s < 4; ++s) CHECK(tid.has(t, s) == ((t & ~s) == 0));
  }
}

TEST_CASE("square and off-diagonal embedding examples") {
  CHECK(square_embed(rel(1, {{0, 0}})).count() == 4);
  CHECK(offdiag_phi(RelMat::identity(3)) == RelMat::identity(9));
  CHECK(declaw(RelMat(2)) == rel(3, {{2, 2}}));
}

TEST_CASE("relfin and Eq meet examples") {
  CHECK(relfin_action(RelMat::identity(3)).is_identity());
  FinSuppEndo f = relfin_action(rel(2, {{1, 0}}));
  CHECK(f(0b01) == 0b10);
  CHECK(f(0b10) == 0);
  CHECK(eq_meet_to_se(3, 0b111).is_identity());
  CHECK(eq_meet_to_se(1, 0) == FinSuppEndo::from_pairs({{1, 0}}));
  CHECK(compose(eq_meet_to_se(2, 0b01), eq_meet_to_se(2, 0b10)) == eq_meet_to_se(2, 0));
}

TEST_CASE("monomial independence examples") {
  std::vector<FinSuppEndo> all4{FinSuppEndo{}, FinSuppEndo::transposition(0, 1),
                                FinSuppEndo::from_images({0, 0}),
                                FinSuppEndo::from_images({1, 1})};
  CHECK(kse_independence(all4, 2).points.size() <= 2);
  auto single = kse_independence({FinSuppEndo{}}, 2);
  CHECK(single.points == std::vector<Point>{0});
  auto two = kse_independence({FinSuppEndo{}, FinSuppEndo::from_images({0, 0})}, 2);
  CHECK(two.points == std::vector<Point>{1});
  CHECK_THROWS_AS(kse_independence({FinSuppEndo{}, FinSuppEndo{}}, 2), std::invalid_argument);
}

TEST_CASE("gzz examples") {
  FiniteMonoid m = gzz_build(1);
  CHECK(m.size() == 4);
  Elem g1 = 1, z1 = 2, z1p = 3;
  CHECK(m.mul(g1, z1) == z1p);
  CHECK(m.mul(z1, g1) == z1);
  CHECK(gzz_build(2).size() == 8);
}

TEST_CASE("factorization") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const auto& x : all_relations(n)) {
      auto fac = factor_relation(x);
      CHECK(factorization_product(fac) == embed_relation(x, fac.size));
    }
  }
}

TEST_CASE("double witness examples") {
  auto cop = rel_coproduct(2);
  auto g = cop.parse("A:{(1,0)}");
  auto w = rel_double_witness(g, cop.parse(""));
  CHECK(w.certified());
  CHECK(w.start == LevelPoint{0, 0});
  CHECK(w.target == LevelPoint{1, 2});
  CHECK(std::count(w.image_g.begin(), w.image_g.end(), w.target) == 1);
  CHECK(std::count(w.image_h.begin(), w.image_h.end(), w.target) == 0);
  auto refl = rel_double_witness(cop.parse("A:{(0,0),(1,0),(1,1)}"),
                                 cop.parse("B:{(0,0),(0,1),(1,1)}"));
  CHECK(refl.certified());
  auto aligned = rel_double_witness(cop.parse("A:{(1,0)}|B:{(0,1)}"),
                                    cop.parse("A:{(1,0)}|B:{(1,0)}"));
  CHECK(aligned.certified());
  CHECK_THROWS_AS(rel_double_witness(g, g), std::invalid_argument);
}
