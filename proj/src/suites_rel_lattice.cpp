#include <algorithm>
#include <map>
#include <set>

#include "coplab/generators.hpp"
#include "coplab/lattice.hpp"
#include "coplab/partition.hpp"
#include "coplab/relation.hpp"
#include "suite_impl.hpp"

namespace coplab::suites {

namespace {

std::string pair_text(const RelMat& a, const RelMat& b) {
  return to_string(a) + " " + to_string(b);
}

// Reflexive-transitive closure of the union, as a partition.
Partition join_oracle(const Partition& a, const Partition& b) {
  RelMat r = rel_union(RelMat::from_partition(a), RelMat::from_partition(b));
  while (true) {
    RelMat next = rel_union(r, rel_compose(r, r));
    if (next == r) break;
    r = next;
  }
  std::vector<std::uint32_t> labels(a.n());
  for (Point p = 0; p < a.n(); ++p) {
    Point q = 0;
    while (!r.has(q, p)) ++q;
    labels[p] = q;
  }
  return Partition(labels);
}

std::size_t bell(std::uint32_t n) {
  std::vector<std::size_t> row{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace

RunReport rel_two_class(const Params& p) {
  RunReport r;
  auto n = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.n.value_or(4), 3, 8));
  r.params = {{"n", n}};
  auto rep = two_class_identity_check(n);
  auto& count = r.add("partition-count");
  count.check(rep.partitions == (std::size_t{1} << (n - 1)) - 1,
              std::to_string(rep.partitions));
  count.detail["partitions"] = rep.partitions;
  auto& idem = r.add("idempotent-not-full");
  idem.checked = rep.partitions;
  idem.pass = rep.idempotent_ok;
  auto& triple = r.add("triple-identity");
  triple.checked = rep.ordered_pairs;
  triple.pass = rep.triple_ok;
  if (!rep.ok()) {
    for (const auto& y : two_class_relations(n)) {
      RelMat yy = rel_compose(y, y);
      if (yy != y || y == RelMat::full(n)) idem.counterexample = to_string(y);
    }
    auto ys = two_class_relations(n);
    for (std::size_t i = 0; i < ys.size() && triple.counterexample.empty(); ++i) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (i != j && rel_compose(rel_compose(ys[i], ys[j]), ys[i]) != RelMat::full(n)) {
          triple.counterexample = pair_text(ys[i], ys[j]);
          break;
        }
      }
    }
  }
  if (n <= 4) {
    auto chain = two_class_chain(n);
    auto& c = r.add("solution-chain");
    c.check(chain.strictly_increasing && chain.membership_ok &&
            chain.sizes.size() == rep.partitions + 1);
    c.detail["sizes"] = chain.sizes;
  }
  return r;
}

RunReport rel_theta(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(200);
  r.params = {{"n", samples}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto& exh = r.add("homomorphism-rel2");
  auto rel2 = all_relations(2);
  for (const auto& g : rel2) {
    for (const auto& h : rel2) {
      exh.check(theta_pfim(rel_compose(g, h)) ==
                    rel_compose(theta_pfim(g), theta_pfim(h)),
                pair_text(g, h));
    }
  }
  auto& rnd = r.add("homomorphism-rel3");
  for (std::uint64_t s = 0; s < samples; ++s) {
    RelMat g = random_rel(rng, 3), h = random_rel(rng, 3);
    rnd.check(theta_pfim(rel_compose(g, h)) ==
                  rel_compose(theta_pfim(g), theta_pfim(h)),
              pair_text(g, h));
  }
  // g = {p} x Omega and h = {p} x (Omega - {p}).
  auto& counter = r.add("diagonal-counterexample");
  auto& cure = r.add("declawed-cure");
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (Point pt = 0; pt < n; ++pt) {
      Mask all = (Mask{1} << n) - 1;
      RelMat g = RelMat::box(n, Mask{1} << pt, all);
      RelMat h = RelMat::box(n, Mask{1} << pt, all & ~(Mask{1} << pt));
      RelMat tg = theta_pfim(g), th = theta_pfim(h);
      counter.check(tg != th && !differs_off_diagonal(tg, th), pair_text(g, h));
      cure.check(differs_off_diagonal(theta_pfim(declaw(g)), theta_pfim(declaw(h))),
                 pair_text(g, h));
    }
  }
  return r;
}

RunReport rel_embeddings(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(200);
  std::uint64_t max_len = p.bound.value_or(3);
  r.params = {{"n", samples}, {"bound", max_len}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto rel2 = all_relations(2);

  auto& assoc = r.add("compose-associative");
  auto& anti = r.add("transpose-anti-homomorphism");
  auto& unit = r.add("identity-and-empty");
  for (const auto& x : rel2) {
    unit.check(rel_compose(RelMat::identity(2), x) == x &&
                   rel_compose(x, RelMat::identity(2)) == x &&
                   rel_compose(RelMat(2), x) == RelMat(2),
               to_string(x));
    for (const auto& y : rel2) {
      anti.check(transpose(rel_compose(x, y)) == rel_compose(transpose(y), transpose(x)),
                 pair_text(x, y));
      for (const auto& z : rel2) {
        assoc.check(rel_compose(rel_compose(x, y), z) == rel_compose(x, rel_compose(y, z)),
                    pair_text(x, y) + " " + to_string(z));
      }
    }
  }
  for (std::uint64_t s = 0; s < samples; ++s) {
    RelMat x = random_rel(rng, 3), y = random_rel(rng, 3), z = random_rel(rng, 3);
    assoc.check(rel_compose(rel_compose(x, y), z) == rel_compose(x, rel_compose(y, z)),
                pair_text(x, y) + " " + to_string(z));
  }

  auto& box = r.add("idempotent-box");
  for (std::uint64_t s = 0; s < samples; ++s) {
    Mask x = uniform(rng, 1, 15), y = uniform(rng, 1, 15);
    if (!(x & y)) {
      bool threw = false;
      try {
        idempotent_box(4, x, y);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      box.check(threw);
      continue;
    }
    RelMat b = idempotent_box(4, x, y);
    box.check(rel_compose(b, b) == b, to_string(b));
  }

  auto& square = r.add("square-embed");
  for (const auto& g : rel2) {
    for (const auto& h : rel2) {
      if (g == h) continue;
      square.check(differs_off_diagonal(square_embed(declaw(g)), square_embed(declaw(h))),
                   pair_text(g, h));
    }
  }
  for (std::uint64_t s = 0; s < samples; ++s) {
    RelMat g = declaw(random_rel(rng, 3)), h = declaw(random_rel(rng, 3));
    square.check(square_embed(rel_compose(g, h)) ==
                     rel_compose(square_embed(g), square_embed(h)),
                 pair_text(g, h));
  }

  auto& off = r.add("offdiag-phi");
  off.check(offdiag_phi(RelMat::identity(3)) == RelMat::identity(9));
  std::set<std::string> branches;
  for (const auto& g : rel2) {
    for (const auto& h : rel2) {
      if (g == h || (g.within_diagonal() && h.within_diagonal())) continue;
      branches.insert(differs_off_diagonal(g, h) ? "off" : "diagonal-only");
      off.check(differs_off_diagonal(offdiag_phi(g), offdiag_phi(h)), pair_text(g, h));
    }
  }
  off.check(branches.size() == 2, "one proof branch never reached");
  for (std::uint64_t s = 0; s < samples; ++s) {
    RelMat g = random_rel(rng, 3), h = random_rel(rng, 3);
    off.check(offdiag_phi(rel_compose(g, h)) == rel_compose(offdiag_phi(g), offdiag_phi(h)),
              pair_text(g, h));
  }

  auto& relfin = r.add("relfin-homomorphism");
  for (const auto& g : rel2) {
    for (const auto& h : rel2) {
      relfin.check(relfin_action(rel_compose(g, h)) ==
                       compose(relfin_action(g), relfin_action(h)),
                   pair_text(g, h));
    }
  }

  auto& fact = r.add("factorization");
  for (std::uint32_t n = 2; n <= 3; ++n) {
    for (const auto& x : all_relations(n)) {
      auto fac = factor_relation(x);
      fact.check(factorization_product(fac) == embed_relation(x, fac.size), to_string(x));
    }
  }

  auto& kse = r.add("kse-independence");
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::set<std::vector<Point>> maps;
    std::size_t k = uniform(rng, 1, 6);
    while (maps.size() < k) {
      std::vector<Point> m(3);
      for (auto& y : m) y = static_cast<Point>(uniform(rng, 0, 2));
      maps.insert(m);
    }
    std::vector<FinSuppEndo> gs;
    for (const auto& m : maps) gs.push_back(FinSuppEndo::from_images(m));
    auto w = kse_independence(gs, 3);
    std::set<std::vector<Point>> monos(w.images.begin(), w.images.end());
    bool ok = monos.size() == gs.size() && !w.points.empty();
    for (std::size_t i = 0; ok && i < gs.size(); ++i) {
      for (std::size_t j = 0; j < w.points.size(); ++j) {
        ok = ok && w.images[i][j] == gs[i](w.points[j]);
      }
    }
    kse.check(ok);
  }

  // Letters without diagonal pairs (and their reflexive versions) differ off
  // the diagonal from each other and from the identity.
  auto& dbl = r.add("double-witness");
  auto& refl = r.add("double-witness-reflexive");
  auto cop = rel_coproduct(3);
  std::vector<RelMat> pool, rpool;
  for (const auto& x : all_relations(3)) {
    bool diagonal_free = rel_union(x, RelMat::identity(3)).count() == x.count() + 3;
    if (x.count() > 0 && diagonal_free) {
      pool.push_back(x);
      rpool.push_back(rel_union(x, RelMat::identity(3)));
    }
  }
  auto word = [&](const std::vector<RelMat>& letters) {
    std::vector<Letter<RelMat>> raw;
    std::size_t tag = uniform(rng, 0, 1);
    for (std::size_t i = 0, len = uniform(rng, 0, max_len); i < len; ++i) {
      raw.push_back({tag, letters[uniform(rng, 0, letters.size() - 1)]});
      tag ^= 1;
    }
    return cop.reduce(raw);
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int kind = 0; kind < 2; ++kind) {
      const auto& letters = kind == 0 ? pool : rpool;
      RelWord g = word(letters), h = word(letters);
      if (g == h) continue;
      auto w = rel_double_witness(g, h);
      bool ok = w.certified();
      if (kind == 1) {
        ok = ok && std::all_of(w.chosen.begin(), w.chosen.end(),
                               [](auto pr) { return pr.first != pr.second; });
      }
      (kind == 0 ? dbl : refl).check(ok, cop.format(g) + " vs " + cop.format(h));
    }
  }
  return r;
}

RunReport rel_gzz(const Params& p) {
  RunReport r;
  auto mmax = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.bound.value_or(3), 1, 5));
  r.params = {{"bound", mmax}};
  auto& assoc = r.add("gzz-associative");
  auto& shape = r.add("gzz-rules");
  auto& cayley = r.add("cayley-faithful");
  for (std::uint32_t m = 1; m <= mmax; ++m) {
    FiniteMonoid g = gzz_build(m);
    std::uint32_t groups = 1u << m;
    shape.check(g.size() == groups + 2 * m, "m=" + std::to_string(m));
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem b = 0; b < g.size(); ++b) {
        for (Elem c = 0; c < g.size(); ++c) {
          assoc.check(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)),
                      g.name(a) + " " + g.name(b) + " " + g.name(c));
        }
        if (a >= groups) shape.check(g.mul(a, b) == a, g.name(a) + " " + g.name(b));
      }
    }
    for (std::uint32_t i = 0; i < m; ++i) {
      Elem gi = 1u << i, zi = groups + 2 * i;
      shape.check(g.mul(gi, zi) == zi + 1 && g.mul(gi, zi + 1) == zi, g.name(gi));
      for (std::uint32_t j = 0; j < m; ++j) {
        if (j != i) shape.check(g.mul(gi, groups + 2 * j) == groups + 2 * j);
      }
    }
    auto reps = cayley_embed(g);
    std::set<FinSuppEndo> distinct(reps.begin(), reps.end());
    bool hom = true;
    for (Elem a = 0; a < g.size(); ++a) {
      for (Elem b = 0; b < g.size(); ++b) {
        hom = hom && compose(reps[a], reps[b]) == reps[g.mul(a, b)];
      }
    }
    cayley.check(distinct.size() == g.size() && hom, "m=" + std::to_string(m));
  }
  auto& eqse = r.add("eq-meet-to-se");
  std::set<FinSuppEndo> images;
  for (Mask s = 0; s < 8; ++s) {
    images.insert(eq_meet_to_se(3, s));
    for (Mask t = 0; t < 8; ++t) {
      eqse.check(compose(eq_meet_to_se(3, s), eq_meet_to_se(3, t)) == eq_meet_to_se(3, s & t),
                 std::to_string(s) + " " + std::to_string(t));
    }
  }
  eqse.check(images.size() == 8, "not injective");
  return r;
}

RunReport lattice_eq_size(const Params& p) {
  RunReport r;
  auto n = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.n.value_or(4), 1, 6));
  r.params = {{"n", n}};
  auto& size = r.add("eq-size");
  auto lat = FinLattice::partition_lattice(n);
  size.check(lat.size() == bell(n), std::to_string(lat.size()));
  size.detail["elements"] = lat.size();
  auto& ops = r.add("operations-vs-oracle");
  for (std::uint32_t m = 1; m <= std::min<std::uint32_t>(n, 4); ++m) {
    auto parts = enumerate_partitions(m);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        RelMat ra = RelMat::from_partition(a), rb = RelMat::from_partition(b);
        RelMat meet = RelMat::from_partition(eq_meet(a, b));
        bool leq = true;
        for (const auto& [q, pp] : ra.pairs()) leq = leq && rb.has(q, pp);
        bool inter = true;
        for (Point q = 0; q < m; ++q) {
          for (Point pp = 0; pp < m; ++pp) {
            inter = inter && meet.has(q, pp) == (ra.has(q, pp) && rb.has(q, pp));
          }
        }
        ops.check(inter && eq_join(a, b) == join_oracle(a, b) && eq_leq(a, b) == leq,
                  to_string(a) + " " + to_string(b));
      }
    }
  }
  auto& jumps = r.add("maximal-chain-jumps");
  for (std::uint32_t m = 1; m <= n; ++m) {
    auto l = FinLattice::partition_lattice(m);
    auto chain = maximal_chain(l);
    std::size_t j = jumps_in_chain(l, chain);
    jumps.check(j == m - 1, "n=" + std::to_string(m) + " jumps=" + std::to_string(j));
    jumps.detail[std::to_string(m)] = j;
  }
  jumps.check(jumps_in_chain(lat, {lat.bottom()}) == 0);
  return r;
}

RunReport lattice_centralizer(const Params& p) {
  RunReport r;
  auto n = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.n.value_or(5), 1, 6));
  r.params = {{"n", n}};
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  auto& s3c = r.add("s3-centralizers");
  auto cl = centralizer_lattice(s3);
  std::multiset<std::size_t> sizes;
  for (const auto& h : cl.sets) sizes.insert(h.count());
  s3c.check(cl.sets.size() == 6 &&
                sizes == std::multiset<std::size_t>{1, 2, 2, 2, 3, 6},
            std::to_string(cl.sets.size()));
  s3c.detail["elements"] = cl.sets.size();
  auto& ab = r.add("abelian-single");
  ab.check(centralizer_lattice(FiniteMonoid::cyclic_group(6)).sets.size() == 1);
  ab.check(centralizer_lattice(FiniteMonoid::direct_product(
               FiniteMonoid::cyclic_group(2), FiniteMonoid::cyclic_group(2)))
               .sets.size() == 1);

  auto& brute = r.add("z2xs3-brute-force");
  FiniteMonoid g = FiniteMonoid::direct_product(FiniteMonoid::cyclic_group(2), s3);
  auto gl = centralizer_lattice(g);
  std::set<Bits> all;
  for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
    Bits x(g.size(), mask);
    all.insert(centralizer(g, x));
  }
  brute.check(all == std::set<Bits>(gl.sets.begin(), gl.sets.end()),
              std::to_string(all.size()) + " vs " + std::to_string(gl.sets.size()));
  brute.detail["elements"] = gl.sets.size();

  auto& anti = r.add("antitone-closure");
  for (std::uint32_t x = 0; x < 64; ++x) {
    Bits bx(6, x);
    Bits cx = centralizer(s3, bx);
    anti.check(centralizer(s3, centralizer(s3, cx)) == cx, to_string(bx));
    for (std::uint32_t y = 0; y < 64; ++y) {
      if ((x & ~y) != 0) continue;
      anti.check(centralizer(s3, Bits(6, y)).is_subset_of(cx));
    }
  }

  auto& chain = r.add("cmxcm-chain");
  auto rep = cmxcm_chain(n);
  chain.check(rep.strictly_increasing && rep.y_membership_ok && rep.product_form_ok &&
              rep.sizes.size() == n + 1 && rep.jumps == n,
              "jumps=" + std::to_string(rep.jumps));
  chain.detail["sizes"] = rep.sizes;
  chain.detail["jumps"] = rep.jumps;
  return r;
}

RunReport lattice_debruijn(const Params& p) {
  RunReport r;
  auto n = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.n.value_or(4), 1, 5));
  r.params = {{"n", n}};
  auto rep = debruijn_family(n);
  auto& orders = r.add("orders");
  orders.check(rep.involutions_ok && rep.pairs_order3 && rep.quads_order5);
  auto& cycle = r.add("full-product-cycle");
  cycle.check(rep.full_product_cycle);
  auto& collapse = r.add("gcd-collapse");
  collapse.check(rep.collapse_ok);
  auto& chain = r.add("power-chain");
  chain.check(rep.chain_ok);
  chain.detail["sizes"] = rep.chain_sizes;
  auto m = std::max<std::uint32_t>(n, 3);
  auto mj = mtvsjn_check(m);
  auto& meets = r.add("meet-family");
  meets.check(mj.meets_discrete && mj.meet_family == m - 1);
  meets.detail["n"] = m;
  meets.detail["family"] = mj.meet_family;
  auto& joins = r.add("join-family");
  joins.check(mj.joins_indiscrete && mj.join_family == (std::size_t{1} << (m - 1)) - 1);
  joins.detail["family"] = mj.join_family;
  return r;
}

RunReport lattice_solutions(const Params& p) {
  RunReport r;
  std::uint64_t bound = p.bound.value_or(4);
  auto n = static_cast<std::uint32_t>(std::clamp<std::uint64_t>(p.n.value_or(3), 1, 5));
  std::uint64_t samples = 200;
  r.params = {{"bound", bound}, {"n", n}, {"seed", p.seed}};
  Rng rng(p.seed);
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);

  auto& cent = r.add("transposition-centralizer");
  Elem c = s3.parse("(0 1)");
  SolutionSystem sys{&s3, 1, {{{{true, 0}, {false, c}}, {{false, c}, {true, 0}}}}};
  Bits sol = solution_set(sys);
  Bits single(s3.size());
  single[c] = true;
  cent.check(sol.count() == 2 && sol == centralizer(s3, single), to_string(sol));
  SolutionSystem same{&s3, 2, {{{{true, 0}, {true, 1}}, {{true, 0}, {true, 1}}}}};
  cent.check(solution_set(same).all());

  auto& lat = r.add("solution-lattice");
  auto principal = principal_solution_sets(s3, 1, bound);
  auto sl = lattice_of_solutions(principal, s3.size());
  for (std::size_t x = 0; x < sl.sets.size(); ++x) {
    for (std::size_t y = 0; y < sl.sets.size(); ++y) {
      Bits both = sl.sets[x] | sl.sets[y];
      Bits meet_of_principal(s3.size());
      meet_of_principal.set();
      for (const auto& pr : principal) {
        if (both.is_subset_of(pr)) meet_of_principal &= pr;
      }
      lat.check(sl.sets[sl.lattice.join(x, y)] == meet_of_principal &&
                    sl.sets[sl.lattice.meet(x, y)] == (sl.sets[x] & sl.sets[y]),
                to_string(sl.sets[x]) + " " + to_string(sl.sets[y]));
    }
  }
  lat.detail["principal"] = principal.size();
  lat.detail["elements"] = sl.sets.size();

  auto& eqp = r.add("eqprod-chain");
  auto ep = eqprod_chain(n);
  eqp.check(ep.strictly_increasing && ep.membership_ok);
  eqp.detail["sizes"] = ep.sizes;

  auto& lower = r.add("lower-solution-sets");
  auto eq3 = FinLattice::partition_lattice(3);
  lower.check(lower_solution_set(eq3, 1, LatTerm::var(0), eq3.top()).all());
  auto chain = maximal_chain(eq3);
  LatTerm v = LatTerm::meet(LatTerm::var(0), LatTerm::constant(chain[1]));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    lower.check(lower_solution_set(eq3, 1, v, chain[i - 1])
                    .is_subset_of(lower_solution_set(eq3, 1, v, chain[i])));
  }

  auto& reduce = r.add("meets-of-joins-reduction");
  std::function<LatTerm(std::size_t, bool)> term = [&](std::size_t depth, bool allow_join) {
    std::size_t pick = depth == 0 ? uniform(rng, 0, 1) : uniform(rng, 0, allow_join ? 3 : 2);
    switch (pick) {
      case 0:
        return LatTerm::var(uniform(rng, 0, 1));
      case 1:
        return LatTerm::constant(uniform(rng, 0, eq3.size() - 1));
      case 2:
        return LatTerm::meet(term(depth - 1, allow_join), term(depth - 1, allow_join));
      default:
        return LatTerm::join(term(depth - 1, allow_join), term(depth - 1, allow_join));
    }
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Joins of meets never contain a meet of joins.
    LatTerm flat = LatTerm::join(term(2, false), term(2, false));
    std::size_t k = uniform(rng, 0, eq3.size() - 1);
    reduce.check(!has_meet_of_join(flat) &&
                     lower_solution_set(eq3, 2, flat, k) ==
                         reduced_lower_solution_set(eq3, 2, flat, k),
                 to_string(flat));
    LatTerm any = term(3, true);
    bool mixed = has_meet_of_join(any);
    reduce.check(mixed == !join_of_meets(any).has_value(), to_string(any));
    if (!mixed) {
      reduce.check(lower_solution_set(eq3, 2, any, k) ==
                       reduced_lower_solution_set(eq3, 2, any, k),
                   to_string(any));
    }
  }
  return r;
}

RunReport lattice_completeness(const Params& p) {
  RunReport r;
  std::uint64_t samples = p.n.value_or(50);
  std::uint64_t max_size = p.bound.value_or(8);
  r.params = {{"n", samples}, {"bound", max_size}, {"seed", p.seed}};
  Rng rng(p.seed);
  auto& round = r.add("generator-round-trip");
  auto& iso = r.add("embedding-isomorphism");
  auto& reject = r.add("insufficient-family-rejected");
  auto& down = r.add("downset-embedding");
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto sl = random_closure_lattice(rng, 4, max_size);
    const auto& lat = sl.lattice;
    std::vector<std::size_t> everything(lat.size());
    for (std::size_t x = 0; x < lat.size(); ++x) everything[x] = x;
    auto ji = lat.join_irreducibles();
    std::string payload;
    for (const auto& b : sl.sets) payload += to_string(b);
    for (const auto* g : {&everything, &ji}) {
      auto f = cond_ib_to_ia(lat, *g);
      auto back = cond_ia_to_ib(lat, f);
      round.check(back == *g, payload);
      bool ok = true;
      for (std::size_t x = 0; x < lat.size(); ++x) {
        for (std::size_t y = 0; y < lat.size(); ++y) {
          ok = ok && lat.leq(x, y) == f[x].is_subset_of(f[y]);
        }
      }
      iso.check(ok, payload);
    }
    for (std::size_t i = 0; i < ji.size(); ++i) {
      auto fewer = ji;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      bool threw = false;
      try {
        cond_ib_to_ia(lat, fewer);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      reject.check(threw, payload);
    }
    auto d = downset_embed(lat);
    std::set<Bits> distinct(d.begin(), d.end());
    down.check(distinct.size() == lat.size(), payload);
    for (std::size_t x = 0; x < lat.size(); ++x) {
      for (std::size_t y = 0; y < lat.size(); ++y) {
        down.check(d[lat.meet(x, y)] == (d[x] & d[y]), payload);
      }
    }
  }

  auto& examples = r.add("worked-examples");
  auto pw = FinLattice::powerset(2);
  std::vector<Bits> ident;
  for (std::size_t x = 0; x < pw.size(); ++x) ident.emplace_back(2, x);
  examples.check(cond_ia_to_ib(pw, ident) == std::vector<std::size_t>{1, 2});
  auto c3 = FinLattice::chain(3);
  auto c3ji = c3.join_irreducibles();
  examples.check(cond_ia_to_ib(c3, cond_ib_to_ia(c3, c3ji)) == c3ji && c3ji.size() == 2);
  examples.check(cond_ia_to_ib(FinLattice::chain(1), {Bits(0)}).empty());
  examples.check(downset_embed(FinLattice::partition_lattice(3)).size() == 5);
  auto mk = FinLattice::m_k(3);
  auto dm = downset_embed(mk);
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; b <= 3; ++b) {
      if (a != b) examples.check(!dm[a].is_subset_of(dm[b]));
    }
  }

  auto& anti = r.add("antichain");
  for (std::uint32_t k = 1; k <= 4; ++k) {
    auto sets = antichain_example(k);
    anti.check(sets.size() == (std::size_t{1} << k), std::to_string(k));
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b < sets.size(); ++b) {
        if (a != b) anti.check(!sets[a].is_subset_of(sets[b]), to_string(sets[a]));
      }
    }
  }

  auto& jumps = r.add("rx2-jumps");
  std::set<Rational> sample;
  while (sample.size() < 10) {
    Rational q(static_cast<long>(uniform(rng, 0, 30)), static_cast<long>(uniform(rng, 1, 30)));
    q.canonicalize();
    if (q <= 1) sample.insert(q);
  }
  auto model = rx2_jump_example({sample.begin(), sample.end()});
  bool located = model.jumps.size() == 10;
  for (auto i : model.jumps) {
    located = located && model.elements[i].second == 0 &&
              model.elements[i + 1].second == 1 &&
              model.elements[i].first == model.elements[i + 1].first;
  }
  jumps.check(located);
  jumps.check(rx2_jump_example({}).jumps.empty());
  return r;
}

}  // namespace coplab::suites
