#include <functional>

#include <doctest.h>

#include "coplab/generators.hpp"
#include "coplab/sym_witness.hpp"

using namespace coplab;

namespace {

const Coproduct<FinSuppEndo>& cop() {
  static const auto c = endo_coproduct();
  return c;
}

EndoWord word(const char* text) { return cop().parse(text); }

using Pair = LevelInvolution::Pair;

std::vector<Pair> sorted_pairs(const LevelInvolution& t) {
  std::vector<Pair> out;
  for (auto [a, b] : t.pairs()) out.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

// Builds the composite as one function, leftmost step outermost, and applies it.
LevelPoint composite(const PadSeq& seq, const EndoWord& w, const LevelInvolution& t,
                     LevelPoint x) {
  std::function<LevelPoint(LevelPoint)> f = [](LevelPoint y) { return y; };
  for (const auto& step : seq) {
    std::function<LevelPoint(LevelPoint)> g;
    if (step.kind == PadStep::kT) {
      g = [&t](LevelPoint y) { return t(y); };
    } else {
      const FinSuppEndo& e = w[step.index].elem;
      g = [&e](LevelPoint y) { return LevelPoint{e(y.p), y.k}; };
    }
    f = [f, g](LevelPoint y) { return f(g(y)); };
  }
  return f(x);
}

void same_witness(const SymWitness& a, const SymWitness& b) {
  CHECK(a.swapped == b.swapped);
  CHECK(a.points == b.points);
  CHECK(a.t.pairs() == b.t.pairs());
  CHECK(a.start == b.start);
  CHECK(a.adjusted_g == b.adjusted_g);
  CHECK(a.adjusted_h == b.adjusted_h);
  CHECK(a.trace_g == b.trace_g);
  CHECK(a.trace_h == b.trace_h);
}

}  // namespace

TEST_CASE("orientation examples") {
  CHECK_FALSE(needs_swap(word("A:(0 1)|B:(0 1)"), word("A:(0 1)")));
  CHECK(needs_swap(word("A:(0 1)"), word("A:(0 1)|B:(0 1)")));
  CHECK_FALSE(needs_swap(word("A:{0:1}"), word("A:{0:2}")));
  CHECK_THROWS_AS(needs_swap(word("A:(0 1)"), word("A:(0 1)")), std::invalid_argument);
}

TEST_CASE("point choice examples") {
  CHECK(choose_points(word("A:{0:1}"), word("")) == std::vector<Point>{0});
  CHECK(choose_points(word("A:{0:1,2:3}"), word("A:{0:1,2:4}")) == std::vector<Point>{2});
  CHECK(choose_points(word("A:(0 1)"), word("")) == std::vector<Point>{0});
}

TEST_CASE("involution examples") {
  auto t1 = build_involution({0}, word("A:(0 1)"));
  CHECK(sorted_pairs(t1) == std::vector<Pair>{{{0, 0}, {0, 1}}, {{1, 1}, {1, 2}}});
  auto t2 = build_involution({0, 0}, word("B:(0 1)|A:(0 1)"));
  CHECK(sorted_pairs(t2) ==
        std::vector<Pair>{{{0, 0}, {0, 1}}, {{0, 2}, {1, 1}}, {{1, 2}, {1, 3}}});
  CHECK_THROWS_AS(build_involution({2}, word("A:(0 1)")), std::invalid_argument);
}

TEST_CASE("padding examples") {
  auto a = word("A:(0 1)");
  CHECK(pad_with_t(a) == PadSeq{PadStep::t(), PadStep::letter(0), PadStep::t()});
  CHECK(pad_with_t(word("B:(0 1)")) ==
        PadSeq{PadStep::t(), PadStep::letter(0), PadStep::t()});
  CHECK(pad_with_t(word(""), a) == PadSeq{PadStep::t(), PadStep::t()});
}

TEST_CASE("trace examples") {
  auto g = word("A:(0 1)");
  auto t = build_involution({0}, g);
  CHECK(evaluate_trace(pad_with_t(g), g, t, {0, 0}) ==
        std::vector<LevelPoint>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(evaluate_trace({PadStep::t(), PadStep::t()}, word(""), t, {0, 0}) ==
        std::vector<LevelPoint>{{0, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("distinguish examples") {
  auto w = distinguish(word("A:(0 1)"), word(""));
  CHECK(w.trace_g.back() == LevelPoint{1, 2});
  CHECK(w.trace_h.back() == LevelPoint{0, 0});
  CHECK(w.valid());
  auto w2 = distinguish(word("A:(0 1)"), word("B:(0 1)"));
  CHECK(w2.adjusted_g != w2.adjusted_h);
  CHECK(w2.valid());
  auto w3 = distinguish(word("A:{0:1}"), word("A:{0:2}"));
  CHECK(w3.valid());
  CHECK(w3.trace_h[2] == LevelPoint{2, 1});
  CHECK(w3.trace_g[2] == LevelPoint{1, 1});
}

TEST_CASE("group case examples") {
  auto g = word("A:(0 1)|B:(1 2)"), h = word("B:(0 1)");
  CHECK(group_case_check(distinguish(g, h), g, h));
  auto bad = word("A:{0:1}");
  CHECK_THROWS_AS(group_case_check(distinguish(bad, h), bad, h), std::invalid_argument);
  Rng rng(61);
  auto pool = sym_pool();
  std::vector<FinSuppEndo> perms(pool.begin(), pool.begin() + 10);
  for (int s = 0; s < 100; ++s) {
    auto a = random_endo_word(rng, cop(), perms, uniform(rng, 0, 4));
    auto b = random_endo_word(rng, cop(), perms, uniform(rng, 0, 4));
    if (a == b) continue;
    CHECK(group_case_check(distinguish(a, b), a, b));
  }
}

TEST_CASE("property: traces agree with the composite oracle and end on top") {
  Rng rng(67);
  auto pool = sym_pool();
  for (int s = 0; s < 300; ++s) {
    auto g = random_endo_word(rng, cop(), pool, uniform(rng, 0, 5));
    auto h = random_endo_word(rng, cop(), pool, uniform(rng, 0, 5));
    if (g == h) continue;
    auto w = distinguish(g, h);
    const EndoWord& first = w.swapped ? h : g;
    const EndoWord& second = w.swapped ? g : h;
    CHECK(w.trace_g.back() == composite(w.adjusted_g, first, w.t, w.start));
    CHECK(w.trace_h.back() == composite(w.adjusted_h, second, w.t, w.start));
    CHECK(w.trace_g.back().k == w.n() + 1);
    CHECK(w.valid());
  }
}

TEST_CASE("property: aligned disagreements are always moved by the first word") {
  // Exhaustive on pool words of length <= 2: orientation never leaves a
  // letter that fixes its chosen point.
  auto words = all_endo_words(cop(), sym_pool(), 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j || !aligned(words[i], words[j])) continue;
      auto [g, h] = orient_pair(words[i], words[j]);
      auto pts = choose_points(g, h);
      for (std::size_t k = 1; k <= g.size(); ++k) {
        CHECK(g.from_right(k).elem(pts[k - 1]) != pts[k - 1]);
      }
    }
  }
}

TEST_CASE("property: SymDistinguisher matches distinguish") {
  Rng rng(71);
  auto pool = sym_pool();
  auto words = all_endo_words(cop(), pool, 2);
  for (int s = 0; s < 40; ++s) {
    auto g = random_endo_word(rng, cop(), pool, uniform(rng, 0, 3));
    SymDistinguisher d(g);
    for (std::size_t j = 0; j < words.size(); j += 7) {
      if (words[j] == g) continue;
      same_witness(d.against(words[j]), distinguish(g, words[j]));
    }
    for (int r = 0; r < 20; ++r) {
      auto h = random_endo_word(rng, cop(), pool, g.size());
      if (h == g) continue;
      same_witness(d.against(h), distinguish(g, h));
    }
  }
}
