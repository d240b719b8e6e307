#include <doctest.h>

#include "coplab/coproduct.hpp"
#include "coplab/finite_monoid.hpp"
#include "coplab/generators.hpp"
#include "coplab/tensor.hpp"

using namespace coplab;

namespace {

// Rewrites until nothing merges: drop identities, multiply equal-tag
// neighbours. Quadratic and independent of the stack-based reduce.
std::vector<Letter<Elem>> naive_reduce(std::vector<Letter<Elem>> w,
                                       const std::vector<FiniteMonoid>& ms) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].elem == ms[w[i].tag].identity()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (i + 1 < w.size() && w[i].tag == w[i + 1].tag) {
        w[i].elem = ms[w[i].tag].mul(w[i].elem, w[i + 1].elem);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("reduce examples over S3 u S3") {
  std::vector<FiniteMonoid> ms{FiniteMonoid::symmetric_group(3),
                               FiniteMonoid::symmetric_group(3)};
  auto cop = table_coproduct(ms);
  CHECK(cop.reduce(cop.parse_raw("A:(0 1)|A:(0 1)")).empty());
  auto ab = cop.parse_raw("A:(0 1)|B:(0 1)");
  CHECK(cop.reduce(ab).letters() == ab);
  CHECK(cop.reduce(cop.parse_raw("A:(0 1)|B:(0 1 2)|B:(0 2 1)|A:(0 1)")).empty());
}

TEST_CASE("multiply and inverse examples") {
  std::vector<FiniteMonoid> ms{FiniteMonoid::symmetric_group(3),
                               FiniteMonoid::cyclic_group(4)};
  auto cop = table_coproduct(ms);
  Rng rng(3);
  for (int s = 0; s < 50; ++s) {
    auto u = random_table_word(rng, cop, ms, uniform(rng, 0, 4));
    CHECK(cop.multiply(u, TableWord{}) == u);
    CHECK(cop.multiply(u, *cop.inverse(u)).empty());
  }
}

TEST_CASE("property: reduce agrees with naive rewriting and is idempotent") {
  std::vector<FiniteMonoid> ms{FiniteMonoid::symmetric_group(3),
                               FiniteMonoid::cyclic_group(4)};
  auto cop = table_coproduct(ms);
  Rng rng(17);
  for (int s = 0; s < 500; ++s) {
    auto raw = random_raw_table_word(rng, ms, uniform(rng, 0, 8));
    auto w = cop.reduce(raw);
    CHECK(w.letters() == naive_reduce(raw, ms));
    CHECK(cop.is_reduced(w.letters()));
    CHECK(cop.reduce(w) == w);
    CHECK(cop.parse(cop.format(w)) == w);
  }
}

TEST_CASE("property: endomap words reduce without inverses") {
  auto cop = endo_coproduct();
  auto pool = sym_pool();
  Rng rng(23);
  for (int s = 0; s < 200; ++s) {
    auto u = random_endo_word(rng, cop, pool, uniform(rng, 0, 4));
    auto v = random_endo_word(rng, cop, pool, uniform(rng, 0, 4));
    auto w = random_endo_word(rng, cop, pool, uniform(rng, 0, 4));
    CHECK(cop.multiply(cop.multiply(u, v), w) == cop.multiply(u, cop.multiply(v, w)));
    CHECK(cop.parse(cop.format(u)) == u);
  }
}

TEST_CASE("tensor examples") {
  TensorElem e10 = TensorElem::letter(0, RatOperator::unit(1, 0));
  REQUIRE(e10.terms().size() == 1);
  CHECK(e10.terms().begin()->second == 1);
  CHECK(e10.terms().begin()->first.size() == 1);
  // Same factor: the product is the matrix product, re-split.
  TensorElem e01 = TensorElem::letter(0, RatOperator::unit(0, 1));
  CHECK(e10 * e01 == TensorElem::letter(0, RatOperator::unit(1, 1)));
  CHECK(e01 * e10 == TensorElem::letter(0, RatOperator::unit(0, 0)));
  CHECK((Rational(2) * e10 - Rational(2) * e10).is_zero());
  CHECK(parse_tensor("A:U(0,0)") == TensorElem::letter(0, RatOperator::unit(0, 0)) -
                                        TensorElem::scalar(1));
}

TEST_CASE("property: single-factor products follow the matrix oracle") {
  Rng rng(29);
  auto random_op = [&] {
    RatOperator op = RatOperator::scalar_op(static_cast<long>(uniform(rng, 0, 2)) - 1);
    for (int i = 0; i < 3; ++i) {
      op.add_entry(static_cast<Point>(uniform(rng, 0, 2)),
                   static_cast<Point>(uniform(rng, 0, 2)),
                   static_cast<long>(uniform(rng, 1, 3)));
    }
    return op;
  };
  for (int s = 0; s < 200; ++s) {
    RatOperator a = random_op(), b = random_op();
    std::size_t tag = uniform(rng, 0, 1);
    CHECK(TensorElem::letter(tag, a) * TensorElem::letter(tag, b) ==
          TensorElem::letter(tag, a * b));
    CHECK(TensorElem::letter(tag, a) + TensorElem::letter(tag, b) ==
          TensorElem::letter(tag, a + b));
  }
}

TEST_CASE("property: tensor multiplication is associative and round-trips") {
  Rng rng(31);
  for (int s = 0; s < 60; ++s) {
    TensorElem x = random_tensor(rng, 2, 2, 2), y = random_tensor(rng, 2, 2, 2),
               z = random_tensor(rng, 2, 2, 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK(parse_tensor(to_string(x)) == x);
    CHECK(x - x == TensorElem{});
  }
}
