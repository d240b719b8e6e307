#include "coplab/generators.hpp"

#include <numeric>

namespace coplab {

FinSuppEndo random_endo(Rng& rng, Point points, bool permutation) {
  std::vector<Point> images(points);
  if (permutation) {
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = points; i > 1; --i) {
      std::swap(images[i - 1], images[uniform(rng, 0, i - 1)]);
    }
  } else {
    for (auto& y : images) y = static_cast<Point>(uniform(rng, 0, points - 1));
  }
  return FinSuppEndo::from_images(images);
}

std::set<Point> random_subset(Rng& rng, Point universe) {
  std::set<Point> out;
  for (Point p = 0; p < universe; ++p) {
    if (coin(rng)) out.insert(p);
  }
  return out;
}

std::vector<FinSuppEndo> sym_pool() {
  std::vector<FinSuppEndo> pool;
  for (Point a = 0; a < 5; ++a) {
    for (Point b = a + 1; b < 5; ++b) {
      pool.push_back(FinSuppEndo::transposition(a, b));
    }
  }
  for (Point a = 0; a < 5; ++a) {
    pool.push_back(FinSuppEndo::from_pairs({{a, (a + 1) % 5}}));
  }
  for (Point a = 0; a < 5; ++a) {
    pool.push_back(
        FinSuppEndo::from_pairs({{a, (a + 2) % 5}, {(a + 1) % 5, (a + 2) % 5}}));
  }
  return pool;
}

std::vector<Letter<Elem>> random_raw_table_word(
    Rng& rng, const std::vector<FiniteMonoid>& monoids, std::size_t length) {
  std::vector<Letter<Elem>> out;
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t tag = uniform(rng, 0, monoids.size() - 1);
    out.push_back(
        {tag, static_cast<Elem>(uniform(rng, 0, monoids[tag].size() - 1))});
  }
  return out;
}

namespace {

template <class E, class Pick>
CopWord<E> random_reduced(Rng& rng, const Coproduct<E>& cop, std::size_t tags,
                          std::size_t length, Pick pick) {
  std::vector<Letter<E>> raw;
  std::size_t tag = uniform(rng, 0, tags - 1);
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) tag = (tag + uniform(rng, 1, tags - 1)) % tags;
    raw.push_back({tag, pick(tag)});
  }
  return cop.reduce(raw);
}

template <class E>
std::vector<CopWord<E>> all_words(const Coproduct<E>& cop,
                                  const std::vector<std::vector<E>>& letters,
                                  std::size_t max_len) {
  std::vector<CopWord<E>> out{CopWord<E>{}};
  std::vector<std::vector<Letter<E>>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter<E>>> next;
    for (const auto& w : layer) {
      for (std::size_t tag = 0; tag < letters.size(); ++tag) {
        if (!w.empty() && w.back().tag == tag) continue;
        for (const auto& e : letters[tag]) {
          next.push_back(w);
          next.back().push_back({tag, e});
        }
      }
    }
    for (const auto& w : next) out.push_back(cop.reduce(w));
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TableWord random_table_word(Rng& rng, const Coproduct<Elem>& cop,
                            const std::vector<FiniteMonoid>& monoids,
                            std::size_t length) {
  return random_reduced<Elem>(rng, cop, monoids.size(), length, [&](std::size_t t) {
    const auto& m = monoids[t];
    Elem e = static_cast<Elem>(uniform(rng, 0, m.size() - 2));
    return e >= m.identity() ? e + 1 : e;
  });
}

EndoWord random_endo_word(Rng& rng, const Coproduct<FinSuppEndo>& cop,
                          const std::vector<FinSuppEndo>& pool,
                          std::size_t length) {
  return random_reduced<FinSuppEndo>(rng, cop, 2, length, [&](std::size_t) {
    return pool[uniform(rng, 0, pool.size() - 1)];
  });
}

std::vector<EndoWord> all_endo_words(const Coproduct<FinSuppEndo>& cop,
                                     const std::vector<FinSuppEndo>& pool,
                                     std::size_t max_len) {
  return all_words<FinSuppEndo>(cop, {pool, pool}, max_len);
}

std::vector<TableWord> all_table_words(const Coproduct<Elem>& cop,
                                       const std::vector<FiniteMonoid>& monoids,
                                       std::size_t max_len) {
  std::vector<std::vector<Elem>> letters;
  for (const auto& m : monoids) {
    letters.emplace_back();
    for (Elem e = 0; e < m.size(); ++e) {
      if (e != m.identity()) letters.back().push_back(e);
    }
  }
  return all_words<Elem>(cop, letters, max_len);
}

RelMat random_rel(Rng& rng, std::uint32_t n) {
  RelMat r(n);
  for (Point q = 0; q < n; ++q) {
    for (Point p = 0; p < n; ++p) r.set(q, p, coin(rng));
  }
  return r;
}

TensorElem random_tensor(Rng& rng, std::size_t max_words, std::size_t max_len,
                         Point max_index) {
  static const int kCoefs[] = {-2, -1, 1, 2};
  while (true) {
    std::vector<RawProduct> raw;
    std::size_t words = uniform(rng, 1, max_words);
    for (std::size_t w = 0; w < words; ++w) {
      RawProduct prod;
      prod.coef = kCoefs[uniform(rng, 0, 3)];
      std::size_t len = uniform(rng, 1, max_len);
      std::size_t tag = uniform(rng, 0, 1);
      for (std::size_t i = 0; i < len; ++i) {
        auto q = static_cast<Point>(uniform(rng, 0, max_index));
        auto p = static_cast<Point>(uniform(rng, 0, max_index));
        prod.factors.push_back({tag, RatOperator::unit(q, p)});
        tag ^= 1;
      }
      raw.push_back(std::move(prod));
    }
    TensorElem x = tensor_normalize(raw);
    if (!x.is_zero()) return x;
  }
}

}  // namespace coplab
