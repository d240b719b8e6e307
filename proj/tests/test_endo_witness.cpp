#include <doctest.h>

#include "coplab/endo_witness.hpp"
#include "coplab/generators.hpp"
#include "coplab/linalg.hpp"
#include "coplab/sym_witness.hpp"

using namespace coplab;

namespace {

TensorElem alpha(Point q, Point p) { return TensorElem::letter(kAlpha, RatOperator::unit(q, p)); }
TensorElem beta(Point q, Point p) { return TensorElem::letter(kBeta, RatOperator::unit(q, p)); }

Rational det(const RatMatrix& m) {
  if (m.size() == 1) return m[0][0];
  Rational out = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    RatMatrix minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<Rational> row;
      for (std::size_t cc = 0; cc < m.size(); ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    out += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return out;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_oracle(const RatMatrix& m) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (std::uint32_t rmask = 0; rmask < (1u << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      for (std::uint32_t cmask = 0; cmask < (1u << cols); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
        RatMatrix sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!(rmask >> r & 1)) continue;
          std::vector<Rational> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (cmask >> c & 1) row.push_back(m[r][c]);
          }
          sub.push_back(row);
        }
        if (det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("En_0 membership examples") {
  CHECK(in_En0(RatOperator::unit(1, 0)));
  CHECK_FALSE(in_En0(RatOperator::identity()));
  CHECK_FALSE(in_En0(RatOperator::unit(0, 0)));
}

TEST_CASE("sigma examples") {
  auto x = alpha(1, 0);
  auto sigma = sigma_select(x);
  CHECK(sigma.count(0));
  CHECK(sigma.count(1));
  auto [before, after] = compression_ranks(x, sigma);
  CHECK(before == 1);
  CHECK(after == 1);
  auto y = alpha(1, 0) + beta(2, 0);
  CHECK(sigma_select(y) == std::set<Point>{0, 1, 2});
  CHECK(compression_ranks(y, sigma_select(y)) == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("word selection examples") {
  auto w1 = endo_witness(alpha(1, 0)).word;
  REQUIRE(w1.n() == 1);
  CHECK(w1.letters[0] == UnitLetter{kAlpha, 1, 0});
  auto x = alpha(1, 1) + alpha(2, 1) * beta(1, 0);
  auto w2 = select_word(x, sigma_select(x));
  CHECK(w2.letters == TensorWord{{kAlpha, 2, 1}, {kBeta, 1, 0}});
  auto z = alpha(1, 1) + alpha(2, 1);
  CHECK(select_word(z, sigma_select(z)).letters == TensorWord{{kAlpha, 2, 1}});
  CHECK_THROWS_AS(select_word(TensorElem::scalar(2), {0}), std::invalid_argument);
}

TEST_CASE("t endomorphism examples") {
  auto t = build_t_endo({{kAlpha, 1, 0}});
  CHECK(t.apply(LevelPoint{0, 0}) == LevelVec{{{0, 1}, 1}});
  CHECK(t.apply(LevelPoint{0, 1}) == LevelVec{{{0, 0}, 1}});
  CHECK(t.apply(LevelPoint{1, 1}) == LevelVec{{{1, 2}, 1}});
  CHECK(t.apply(LevelPoint{1, 2}) == LevelVec{{{1, 1}, 1}});
  CHECK(t.apply(LevelPoint{9, 0}) == LevelVec{{{9, 0}, 1}});
  CHECK(t.is_involution());
  auto diag = build_t_endo({{kAlpha, 1, 1}});
  CHECK(diag.is_involution());
}

TEST_CASE("evaluation examples") {
  auto w = endo_witness(alpha(1, 0));
  CHECK(w.target == LevelPoint{1, 2});
  CHECK(w.target_coefficient == 1);
  auto w3 = endo_witness(Rational(3) * alpha(1, 0));
  CHECK(w3.target_coefficient == 3);
  auto s = endo_witness(TensorElem::scalar(Rational(-2, 3)));
  CHECK(s.certified());
  CHECK_THROWS_AS(endo_witness(TensorElem{}), std::invalid_argument);
}

TEST_CASE("property: witnesses certify and scale linearly") {
  Rng rng(73);
  for (int s = 0; s < 100; ++s) {
    TensorElem x = random_tensor(rng, 3, 3, 3);
    auto w = endo_witness(x);
    CHECK(w.certified());
    CHECK(w.t.is_involution());
    CHECK(w.target.k == w.n() + 1);
    Rational c(static_cast<long>(uniform(rng, 1, 5)), static_cast<long>(uniform(rng, 1, 5)));
    c.canonicalize();
    auto wc = endo_witness(c * x);
    CHECK(wc.word.letters == w.word.letters);
    CHECK(wc.target_coefficient == c * w.target_coefficient);
  }
}

TEST_CASE("Vandermonde examples") {
  CHECK(rank(vandermonde_embed({1, 2, 3}, 3)) == 3);
  CHECK(rank(vandermonde_embed({0}, 1)) == 1);
  CHECK_THROWS_AS(vandermonde_embed({1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_embed({1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("property: rank agrees with the minor oracle") {
  Rng rng(79);
  for (int s = 0; s < 150; ++s) {
    std::size_t rows = uniform(rng, 1, 4), cols = uniform(rng, 1, 4);
    RatMatrix m(rows, std::vector<Rational>(cols));
    for (auto& row : m) {
      for (auto& v : row) v = static_cast<long>(uniform(rng, 0, 4)) - 2;
    }
    if (coin(rng) && rows > 1) m[rows - 1] = m[0];
    CHECK(rank(m) == rank_oracle(m));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<Rational> as;
    for (std::size_t i = 0; i < k; ++i) as.push_back(Rational(static_cast<long>(2 * i) - 3, 2));
    for (auto& a : as) a.canonicalize();
    CHECK(rank_oracle(vandermonde_embed(as, k)) == k);
    CHECK(rank(vandermonde_embed(as, k + 2)) == k);
  }
}

TEST_CASE("orthogonal idempotent examples") {
  CHECK(orthogonal_idempotent_check({RatOperator::unit(0, 0), RatOperator::unit(1, 1)}));
  CHECK_FALSE(orthogonal_idempotent_check({RatOperator::unit(0, 0), RatOperator::unit(0, 0)}));
  CHECK_FALSE(orthogonal_idempotent_check({RatOperator::unit(1, 0)}));
}
