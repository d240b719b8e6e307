#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coplab/coproduct.hpp"
#include "coplab/endo_witness.hpp"
#include "coplab/functorial.hpp"
#include "coplab/generators.hpp"
#include "coplab/ground.hpp"
#include "coplab/linalg.hpp"
#include "coplab/path_product.hpp"
#include "coplab/sym_witness.hpp"
#include "coplab/tensor.hpp"
#include "suite_impl.hpp"

namespace coplab::suites {

namespace {

std::string subsets_text(const std::vector<FinSubset>& rs) {
  std::string out;
  for (const auto& r : rs) {
    out += "{";
    bool first = true;
    for (auto p : r) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
    out += "}";
  }
  return out;
}

std::string word_text(const FreeWord& w) {
  std::string out;
  for (auto i : w) out += "x" + std::to_string(i);
  return out.empty() ? "1" : out;
}

FreeWord random_free_word(Rng& rng, std::size_t letters, std::size_t max_len) {
  FreeWord w(uniform(rng, 0, max_len));
  for (auto& x : w) x = uniform(rng, 0, letters - 1);
  return w;
}

}  // namespace

RunReport ground_laws(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(500);
  auto points = static_cast<Point>(std::max<std::uint64_t>(p.bound.value_or(6), 2));
  r.params = {{"n", samples}, {"bound", points}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto& assoc = r.add("compose-associative");
  auto& pointwise = r.add("compose-pointwise");
  auto& perm = r.add("permutation-oracle");
  auto& inv = r.add("inverse");
  auto& text = r.add("text-round-trip");
  auto& block = r.add("block-embed-homomorphism");
  auto& invol = r.add("involution");
  for (std::uint64_t s = 0; s < samples; ++s) {
    FinSuppEndo f = random_endo(rng, points, coin(rng));
    FinSuppEndo g = random_endo(rng, points, coin(rng));
    FinSuppEndo h = random_endo(rng, points);
    std::string fgh = to_string(f) + " " + to_string(g) + " " + to_string(h);
    assoc.check(compose(compose(f, g), h) == compose(f, compose(g, h)), fgh);
    FinSuppEndo fg = compose(f, g);
    bool ok = true;
    for (Point x = 0; x < points + 2; ++x) ok = ok && fg(x) == f(g(x));
    pointwise.check(ok, fgh);

    std::set<Point> images;
    for (Point x = 0; x < points; ++x) images.insert(f(x));
    perm.check(is_permutation(f) == (images.size() == points), to_string(f));
    if (is_permutation(f)) {
      FinSuppEndo fi = inverse(f);
      inv.check(compose(f, fi).is_identity() && compose(fi, f).is_identity(),
                to_string(f));
    }
    text.check(parse_endo(to_string(f)) == f, to_string(f));

    // Random blocks of {0..points-1} and per-block maps.
    std::vector<Point> order(points);
    std::iota(order.begin(), order.end(), Point{0});
    for (Point i = points; i > 1; --i) {
      std::swap(order[i - 1], order[uniform(rng, 0, i - 1)]);
    }
    std::vector<std::vector<Point>> blocks{{}};
    for (auto x : order) {
      if (!blocks.back().empty() && coin(rng)) blocks.emplace_back();
      blocks.back().push_back(x);
    }
    auto block_map = [&](const std::vector<Point>& b) {
      std::vector<FinSuppEndo::Entry> pairs;
      for (auto x : b) pairs.emplace_back(x, b[uniform(rng, 0, b.size() - 1)]);
      return FinSuppEndo::from_pairs(pairs);
    };
    std::vector<FinSuppEndo> m1, m2, m12;
    for (const auto& b : blocks) {
      m1.push_back(block_map(b));
      m2.push_back(block_map(b));
      m12.push_back(compose(m1.back(), m2.back()));
    }
    FinSuppEndo e1 = block_product_embed(blocks, m1);
    bool restrict_ok = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (auto x : blocks[i]) restrict_ok = restrict_ok && e1(x) == m1[i](x);
    }
    block.check(restrict_ok && compose(e1, block_product_embed(blocks, m2)) ==
                                   block_product_embed(blocks, m12),
                to_string(e1));

    // Disjoint pairs from a grid of level points.
    std::vector<LevelPoint> grid;
    for (Point x = 0; x < 3; ++x) {
      for (std::uint32_t k = 0; k < 3; ++k) grid.push_back({x, k});
    }
    for (std::size_t i = grid.size(); i > 1; --i) {
      std::swap(grid[i - 1], grid[uniform(rng, 0, i - 1)]);
    }
    std::vector<LevelInvolution::Pair> pairs;
    std::size_t k = uniform(rng, 0, grid.size() / 2);
    for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(grid[2 * i], grid[2 * i + 1]);
    auto t = LevelInvolution::from_pairs(pairs);
    bool tt = true;
    for (const auto& x : grid) {
      tt = tt && apply_involution(t, apply_involution(t, x)) == x &&
           apply_involution(t, x) == t(x);
    }
    invol.check(tt);
  }
  return r;
}

RunReport coproduct_normal_form(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(1000);
  std::uint64_t max_len = p.bound.value_or(4);
  r.params = {{"n", samples}, {"bound", max_len}, {"seed", p.seed}};
  Rng rng(p.seed);
  std::vector<FiniteMonoid> ms{FiniteMonoid::symmetric_group(3),
                               FiniteMonoid::cyclic_group(4)};
  auto cop = table_coproduct(ms);
  auto raw = [&] { return random_raw_table_word(rng, ms, uniform(rng, 0, max_len)); };
  auto& idem = r.add("reduce-idempotent");
  auto& hom = r.add("reduce-homomorphism");
  auto& assoc = r.add("multiply-associative");
  auto& inv = r.add("group-inverse");
  auto& text = r.add("text-round-trip");
  auto& tassoc = r.add("tensor-associative");
  auto& ttext = r.add("tensor-text-round-trip");
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto a = raw(), b = raw(), c = raw();
    auto u = cop.reduce(a), v = cop.reduce(b), w = cop.reduce(c);
    idem.check(cop.reduce(u) == u && cop.is_reduced(u.letters()), cop.format(u));
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    hom.check(cop.reduce(ab) == cop.multiply(u, v),
              cop.format(u) + " * " + cop.format(v));
    assoc.check(cop.multiply(cop.multiply(u, v), w) ==
                    cop.multiply(u, cop.multiply(v, w)),
                cop.format(u) + " ; " + cop.format(v) + " ; " + cop.format(w));
    auto ui = cop.inverse(u);
    inv.check(ui && cop.multiply(u, *ui).empty() && cop.multiply(*ui, u).empty(),
              cop.format(u));
    text.check(cop.parse(cop.format(u)) == u, cop.format(u));
    if (s % 10 == 0) {
      auto x = random_tensor(rng, 2, 2, 2), y = random_tensor(rng, 2, 2, 2),
           z = random_tensor(rng, 2, 2, 2);
      tassoc.check((x * y) * z == x * (y * z),
                   to_string(x) + " ; " + to_string(y) + " ; " + to_string(z));
      ttext.check(parse_tensor(to_string(x)) == x, to_string(x));
    }
  }
  return r;
}

RunReport functorial_separator(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(200);
  auto universe = static_cast<Point>(std::clamp<std::uint64_t>(p.bound.value_or(5), 2, 10));
  r.params = {{"n", samples}, {"bound", universe}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto& sep = r.add("separator-minimal");
  auto& xr = r.add("build-Xr-traces");
  auto& free = r.add("free-tuple");
  auto& es = r.add("es-code");
  auto& li = r.add("left-inverse");
  auto& cuts = r.add("cut-section");
  auto& minf = r.add("min-monoid-functor");
  auto& diag = r.add("diagonal-separator");
  auto& eqp = r.add("eq-product-embed");
  auto all = all_subsets(universe);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::size_t k = uniform(rng, 2, 5);
    std::set<FinSubset> distinct;
    while (distinct.size() < k) distinct.insert(random_subset(rng, universe));
    std::vector<FinSubset> rs(distinct.begin(), distinct.end());
    for (std::size_t i = rs.size(); i > 1; --i) {
      std::swap(rs[i - 1], rs[uniform(rng, 0, i - 1)]);
    }
    FinSubset sv = find_separator(rs);
    bool minimal = separates(sv, rs);
    for (const auto& t : all) {
      if (t.size() < sv.size() && separates(t, rs)) minimal = false;
    }
    sep.check(minimal, subsets_text(rs));

    auto labels = build_Xr(rs[0], universe);
    bool traces = labels.size() == all.size();
    for (std::size_t i = 0; traces && i < all.size(); ++i) {
      traces = labels[i].s == all[i] &&
               labels[i].trace == restrict_cs(rs[0], all[i]);
    }
    xr.check(traces, subsets_text({rs[0]}));

    FreeWord v = random_free_word(rng, rs.size(), 4);
    FreeWord w = random_free_word(rng, rs.size(), 4);
    if (v != w) {
      auto fw = verify_free_tuple(rs, v, w);
      free.check(separates(fw.s, rs) && fw.projected_v != fw.projected_w,
                 subsets_text(rs) + " " + word_text(v) + " " + word_text(w));
    }

    const FinSubset& base = rs[0];
    auto codes = enumerate_es(base);
    bool es_ok = codes.size() == (std::size_t{1} << base.size());
    for (std::size_t c = 0; es_ok && c < codes.size(); ++c) {
      es_ok = es_code(base, codes[c]) == c;
    }
    es.check(es_ok, subsets_text({base}));

    std::set<std::uint64_t> targets;
    std::size_t m = uniform(rng, 1, 6);
    while (targets.size() < m) targets.insert(uniform(rng, 0, 30));
    std::vector<std::uint64_t> a(targets.begin(), targets.end());
    std::reverse(a.begin(), a.end());
    auto left = left_inverse(a);
    bool li_ok = true;
    for (std::size_t i = 0; i < a.size(); ++i) li_ok = li_ok && left(a[i]) == i;
    li.check(li_ok);

    std::vector<Rational> reals;
    Rational x = Rational(static_cast<long>(uniform(rng, 0, 6)) - 3, 2);
    for (std::size_t i = 0, len = uniform(rng, 2, 6); i < len; ++i) {
      reals.push_back(x);
      x += Rational(static_cast<long>(uniform(rng, 1, 5)), static_cast<long>(uniform(rng, 1, 4)));
    }
    auto q = rational_cuts(reals);
    bool cut_ok = true;
    for (std::size_t i = 0; i < reals.size(); ++i) {
      cut_ok = cut_ok && cut_map_as(q, section_b(reals, i)) == i;
    }
    cuts.check(cut_ok);

    std::vector<std::uint64_t> iso(5);
    for (auto& y : iso) y = uniform(rng, 0, 4);
    std::sort(iso.begin(), iso.end());
    auto elem = [&] {
      return coin(rng) ? MinMonoidElem::one() : MinMonoidElem::gen(uniform(rng, 0, 4));
    };
    MinMonoidElem e1 = elem(), e2 = elem();
    minf.check(is_isotone(iso) &&
               min_monoid_functor(iso, min_monoid_op(e1, e2)) ==
                   min_monoid_op(min_monoid_functor(iso, e1),
                                 min_monoid_functor(iso, e2)));

    FreeWord u1 = random_free_word(rng, 4, 4), u2 = random_free_word(rng, 4, 4);
    if (u1 != u2) {
      bool found = diagonal_separator_free(u1, u2, 4).has_value();
      std::vector<std::uint64_t> m1(u1.begin(), u1.end()), m2(u2.begin(), u2.end());
      bool min_ok = diagonal_separator_min(m1, m2, 4).has_value() ==
                    (min_monoid_eval(m1) != min_monoid_eval(m2));
      diag.check(found && min_ok, word_text(u1) + " " + word_text(u2));
    }

    auto random_partition = [&](std::uint32_t n) {
      std::vector<std::uint32_t> labels(n);
      for (auto& l : labels) l = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
      return Partition(labels);
    };
    std::vector<Partition> pa{random_partition(3), random_partition(3)};
    std::vector<Partition> pb{random_partition(3), random_partition(3)};
    Partition ea = eq_product_embed(pa), eb = eq_product_embed(pb);
    Partition em = eq_product_embed({eq_meet(pa[0], pb[0]), eq_meet(pa[1], pb[1])});
    eqp.check(em == eq_meet(ea, eb) && ((ea == eb) == (pa == pb)),
              to_string(pa[0]) + "," + to_string(pa[1]) + " " + to_string(pb[0]) +
                  "," + to_string(pb[1]));
  }
  return r;
}

RunReport sym_exhaustive(const Params& p) {
  RunReport r;
  std::uint64_t depth = p.depth.value_or(3);
  std::uint64_t samples = p.n.value_or(500);
  std::uint64_t max_len = p.bound.value_or(6);
  r.params = {{"depth", depth}, {"n", samples}, {"bound", max_len}, {"seed", p.seed}};
  auto cop = endo_coproduct(2);
  auto pool = sym_pool();
  auto words = all_endo_words(cop, pool, depth);
  auto& ex = r.add("exhaustive-separated");
  auto& top = r.add("exhaustive-top-level");
  // Words come shortest first; the longer word takes the cached side.
  for (std::size_t i = 0; i < words.size(); ++i) {
    SymDistinguisher d(words[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const SymWitness& w = d.against(words[j]);
      bool sep = w.separated(), reach = w.reaches_top();
      if (sep && reach) {
        ++ex.checked;
        ++top.checked;
        continue;
      }
      std::string payload = cop.format(words[i]) + " vs " + cop.format(words[j]);
      ex.check(sep, payload);
      top.check(reach, payload);
    }
  }
  ex.detail["words"] = words.size();

  Rng rng(p.seed);
  auto& rnd = r.add("random-valid");
  auto& support = r.add("involution-support");
  auto& group = r.add("group-case");
  std::vector<FinSuppEndo> perms(pool.begin(), pool.begin() + 10);
  // Equal draws are redrawn, so exactly `samples` pairs are checked.
  while (rnd.checked < samples) {
    auto g = random_endo_word(rng, cop, pool, uniform(rng, 0, max_len));
    auto h = random_endo_word(rng, cop, pool, uniform(rng, 0, max_len));
    if (g == h) continue;
    auto w = distinguish(g, h);
    std::string payload = cop.format(g) + " vs " + cop.format(h);
    rnd.check(w.valid(), payload);
    support.check(w.t.support_size() <= 2 * (w.n() + 1), payload);
  }
  while (group.checked < samples) {
    auto pg = random_endo_word(rng, cop, perms, uniform(rng, 0, max_len));
    auto ph = random_endo_word(rng, cop, perms, uniform(rng, 0, max_len));
    if (pg == ph) continue;
    auto pw = distinguish(pg, ph);
    group.check(pw.valid() && group_case_check(pw, pg, ph),
                cop.format(pg) + " vs " + cop.format(ph));
  }
  return r;
}

RunReport endo_random(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(200);
  std::uint64_t max_len = p.bound.value_or(3);
  r.params = {{"n", samples}, {"bound", max_len}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto& cert = r.add("certified");
  auto& invol = r.add("t-involution");
  auto& level = r.add("target-level");
  auto& coef = r.add("target-coefficient");
  auto& sigma = r.add("sigma-rank");
  for (std::uint64_t s = 0; s < samples; ++s) {
    TensorElem x = random_tensor(rng, 3, max_len, 3);
    std::string payload = to_string(x);
    EndoWitness w = endo_witness(x);
    cert.check(w.certified(), payload);
    invol.check(w.t.is_involution(), payload);
    level.check(w.target.k == w.n() + 1 && w.start.k == 0, payload);
    auto it = w.result.find(w.target);
    Rational got = it == w.result.end() ? Rational(0) : it->second;
    coef.check(got == w.target_coefficient &&
                   (w.n() == 0 ? got == x.scalar_part()
                               : got == w.word.coefficient),
               payload);
    auto [before, after] = compression_ranks(x, w.sigma);
    sigma.check(before == after && w.sigma.count(0) == 1, payload);
  }
  return r;
}

RunReport endo_vandermonde(const Params& p) {
  RunReport r;
  std::uint64_t kmax = std::max<std::uint64_t>(p.n.value_or(8), 1);
  std::uint64_t samples = p.bound.value_or(25);
  r.params = {{"n", kmax}, {"bound", samples}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto& rank_ok = r.add("rank-equals-k");
  auto& rows = r.add("row-multiplicative");
  auto& orth = r.add("orthogonal-idempotents");
  auto rnd = [&] {
    Rational q(static_cast<long>(uniform(rng, 0, 20)) - 10,
               static_cast<long>(uniform(rng, 1, 6)));
    q.canonicalize();
    return q;
  };
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::vector<Rational> as;
      while (as.size() < k) {
        Rational a = rnd();
        if (std::find(as.begin(), as.end(), a) == as.end()) as.push_back(a);
      }
      std::string payload;
      for (const auto& a : as) payload += to_string(a) + " ";
      rank_ok.check(rank(vandermonde_embed(as, k)) == k, payload);
      Rational a = as[0], b = rnd(), ab = a * b;
      auto ra = vandermonde_embed({a}, k)[0];
      auto rb = vandermonde_embed({b}, k)[0];
      auto rab = vandermonde_embed({ab}, k)[0];
      bool mult = true;
      for (std::size_t i = 0; i < k; ++i) mult = mult && ra[i] * rb[i] == rab[i];
      rows.check(mult, to_string(a) + " " + to_string(b));
    }
  }
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::set<Point> idx;
    std::size_t m = uniform(rng, 1, 4);
    while (idx.size() < m) idx.insert(static_cast<Point>(uniform(rng, 0, 6)));
    std::vector<RatOperator> ops;
    for (auto i : idx) ops.push_back(RatOperator::unit(i, i));
    bool positive = orthogonal_idempotent_check(ops);
    ops.push_back(ops.front());
    bool negative = !orthogonal_idempotent_check(ops);
    orth.check(positive && negative);
  }
  return r;
}

RunReport path_product(const Params& p) {
  RunReport r;
  std::uint64_t max_len = p.bound.value_or(4);
  std::uint64_t depth = p.depth.value_or(2);
  std::uint64_t samples = p.n.value_or(100);
  r.params = {{"bound", max_len}, {"depth", depth}, {"n", samples}, {"seed", p.seed}};
  Rng rng(p.seed);

  // Two-point carriers: all maps of {0,1}, and Z_2.
  FiniteMonoid t2 = FiniteMonoid::transformation_monoid(2, {{1, 0}, {0, 0}, {1, 1}});
  FiniteMonoid z2 = FiniteMonoid::transformation_monoid(2, {{1, 0}});
  std::vector<MSet> two_point{MSet::natural(t2), MSet::natural(z2)};
  // Replacing a final step needs a third value in that coordinate.
  std::vector<MSet> mixed{MSet::natural(FiniteMonoid::symmetric_group(3)),
                          MSet::natural(z2)};
  auto& cases = r.add("four-cases");
  auto& laws = r.add("action-laws");
  auto& transport = r.add("phi-transport");
  auto& round = r.add("phi-round-trip");
  std::map<std::string, std::uint64_t> seen;
  for (const auto* carriers : {&two_point, &mixed}) {
    const auto& small = *carriers;
    for (const auto& x : enumerate_paths(small, 3)) {
      for (std::size_t j = 0; j < small.size(); ++j) {
        const FiniteMonoid& m = small[j].monoid();
        laws.check(path_act(small, j, m.identity(), x) == x, to_string(x));
        for (Elem g = 0; g < m.size(); ++g) {
          PathPoint y = path_act(small, j, g, x);
          if (y == x) {
            ++seen["fixed"];
          } else if (y.size() == x.size() + 1) {
            ++seen["extend"];
          } else if (y.size() + 1 == x.size()) {
            ++seen["retract"];
          } else {
            ++seen["replace"];
          }
          std::string payload = to_string(x) + " j=" + std::to_string(j) +
                                " g=" + m.name(g);
          laws.check(is_path(y, small), payload);
          transport.check(
              y == phi_j_inverse(simple_act(small, j, g, phi_j(x, j)), j), payload);
          for (Elem h = 0; h < m.size(); ++h) {
            laws.check(path_act(small, j, g, path_act(small, j, h, x)) ==
                           path_act(small, j, m.mul(g, h), x),
                       payload + " h=" + m.name(h));
          }
        }
        PathPoint y = phi_j(x, j);
        round.check(in_box_j(y, j, small) && phi_j_inverse(y, j) == x, to_string(x));
        for (std::uint32_t v = 0; v < small[j].points(); ++v) {
          PathPoint z = x;
          z.push_back(x.back());
          z.back()[j] = v;
          if (!in_box_j(z, j, small)) continue;
          round.check(phi_j(phi_j_inverse(z, j), j) == z, to_string(z));
        }
      }
    }
  }
  cases.check(seen.size() == 4, "cases seen: " + std::to_string(seen.size()));
  for (const auto& [k, v] : seen) cases.detail[k] = v;

  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  std::vector<FiniteMonoid> ms{s3, s3};
  auto cop = table_coproduct(ms);
  ClosedMSet closed = strong_closure(MSet::natural(s3), depth);
  std::vector<MSet> factors{closed.mset, closed.mset};
  auto& strong = r.add("closure-strongly-faithful");
  strong.check(strongly_faithful_up_to(closed.mset, 3) == (depth >= 2));
  strong.check(!strongly_faithful_up_to(strong_closure(MSet::natural(s3), 0).mset, 2));

  auto& cross = r.add("reduction-invariant");
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto raw = random_raw_table_word(rng, ms, uniform(rng, 0, 6));
    Tuple t{static_cast<std::uint32_t>(uniform(rng, 0, closed.mset.points() - 1)),
            static_cast<std::uint32_t>(uniform(rng, 0, closed.mset.points() - 1))};
    PathPoint x{t};
    for (std::size_t st = uniform(rng, 0, 3); st > 0; --st) {
      std::size_t j = uniform(rng, 0, 1);
      x = path_act(factors, j, static_cast<Elem>(uniform(rng, 0, 5)), x);
    }
    auto w = cop.reduce(raw);
    cross.check(path_eval(factors, raw, x) == path_eval(factors, w, x),
                cop.format(w) + " at " + to_string(x));
  }

  auto& faithful = r.add("faithful-witness");
  auto words = all_table_words(cop, ms, max_len);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      auto w = faithful_witness(words[i], words[j], factors);
      bool ok = w && w->gx != w->hx;
      if (ok) {
        ++faithful.checked;
        continue;
      }
      faithful.check(false, cop.format(words[i]) + " vs " + cop.format(words[j]));
    }
  }
  faithful.detail["words"] = words.size();

  // ac = bc with a != b in the maps of {0,1}; d the swap of the second factor.
  auto& control = r.add("non-cancellative-control");
  FiniteMonoid m1 = FiniteMonoid::transformation_monoid(2, {{1, 0}, {1, 1}, {0, 0}});
  auto find = [](const FiniteMonoid& m, std::vector<Point> images) {
    for (Elem e = 0; e < m.size(); ++e) {
      if (m.map(e) == images) return e;
    }
    throw std::logic_error("path control: element missing");
  };
  Elem a = find(m1, {1, 0}), b = find(m1, {1, 1}), c = find(m1, {0, 0});
  Elem d = find(z2, {1, 0});
  std::vector<FiniteMonoid> cms{m1, z2};
  auto ccop = table_coproduct(cms);
  auto adc = ccop.reduce({{0, a}, {1, d}, {0, c}});
  auto bdc = ccop.reduce({{0, b}, {1, d}, {0, c}});
  control.check(m1.mul(a, c) == m1.mul(b, c) && a != b && adc != bdc &&
                !right_cancellative(m1));
  std::vector<MSet> cf{MSet::natural(m1), MSet::natural(z2)};
  for (const auto& x : enumerate_paths(cf, 5)) {
    control.check(path_eval(cf, adc, x) == path_eval(cf, bdc, x), to_string(x));
  }
  ClosedMSet c1 = strong_closure(cf[0], depth), c2 = strong_closure(cf[1], depth);
  control.check(!faithful_witness(adc, bdc, {c1.mset, c2.mset}).has_value());
  return r;
}

}  // namespace coplab::suites
