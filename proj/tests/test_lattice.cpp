#include <doctest.h>

#include "coplab/generators.hpp"
#include "coplab/lattice.hpp"
#include "coplab/partition.hpp"

using namespace coplab;

namespace {

Bits bits(std::size_t n, std::uint64_t mask) { return Bits(n, mask); }

}  // namespace

TEST_CASE("partition lattice examples") {
  Partition a = Partition::generated(3, {{0, 1}}), b = Partition::generated(3, {{1, 2}});
  CHECK(eq_join(a, b) == Partition::indiscrete(3));
  CHECK(eq_meet(a, b) == Partition::discrete(3));
  CHECK(to_string(a) == "01|2");
  std::size_t sizes[] = {1, 1, 2, 5, 15, 52};
  for (std::uint32_t n = 0; n <= 5; ++n) CHECK(enumerate_partitions(n).size() == sizes[n]);
  CHECK(FinLattice::partition_lattice(4).size() == 15);
}

TEST_CASE("constructed lattices") {
  CHECK(FinLattice::chain(4).covering_pairs().size() == 3);
  auto pw = FinLattice::powerset(3);
  CHECK(pw.size() == 8);
  CHECK(pw.meet(0b011, 0b110) == 0b010);
  CHECK(pw.join(0b001, 0b100) == 0b101);
  CHECK(pw.join_irreducibles() == std::vector<std::size_t>{1, 2, 4});
  auto m3 = FinLattice::m_k(3);
  CHECK(m3.size() == 5);
  CHECK(m3.join(1, 2) == m3.top());
  CHECK(m3.meet(1, 2) == m3.bottom());
  // Two incomparable elements with no join.
  std::vector<bool> order{true, false, false, true};
  CHECK_THROWS_AS(FinLattice(2, order), std::invalid_argument);
  CHECK_THROWS_AS(FinLattice::from_sets({bits(2, 1), bits(2, 2)}), std::invalid_argument);
}

TEST_CASE("jump examples") {
  auto eq3 = FinLattice::partition_lattice(3);
  auto chain = maximal_chain(eq3);
  CHECK(chain.size() == 3);
  CHECK(jumps_in_chain(eq3, chain) == 2);
  CHECK(jumps_in_chain(eq3, {eq3.bottom()}) == 0);
  CHECK(jumps_in_chain(eq3, {eq3.bottom(), eq3.top()}) == 0);
  CHECK_THROWS_AS(jumps_in_chain(eq3, {eq3.top(), eq3.bottom()}), std::invalid_argument);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto l = FinLattice::partition_lattice(n);
    CHECK(jumps_in_chain(l, maximal_chain(l)) == n - 1);
  }
}

TEST_CASE("property: closure lattices meet by intersection, join by least cover") {
  Rng rng(101);
  for (int s = 0; s < 50; ++s) {
    auto sl = random_closure_lattice(rng, 5, 10);
    const auto& sets = sl.sets;
    for (std::size_t x = 0; x < sets.size(); ++x) {
      for (std::size_t y = 0; y < sets.size(); ++y) {
        CHECK(sets[sl.lattice.meet(x, y)] == (sets[x] & sets[y]));
        Bits least = bits(5, 0b11111);
        for (const auto& z : sets) {
          if ((sets[x] | sets[y]).is_subset_of(z)) least &= z;
        }
        CHECK(sets[sl.lattice.join(x, y)] == least);
        CHECK(sl.lattice.leq(x, y) == sets[x].is_subset_of(sets[y]));
      }
    }
  }
}

TEST_CASE("solution set examples") {
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  Elem c = s3.parse("(0 1)");
  SolutionSystem sys{&s3, 1, {{{{true, 0}, {false, c}}, {{false, c}, {true, 0}}}}};
  Bits sol = solution_set(sys);
  CHECK(sol.count() == 2);
  CHECK(sol[s3.identity()]);
  CHECK(sol[c]);
  SolutionSystem none{&s3, 2, {}};
  CHECK(solution_set(none).count() == 36);
  auto sl = solution_lattice(s3, 1, 4);
  CHECK(sl.sets.back().all());
}

TEST_CASE("lower solution set examples") {
  auto eq3 = FinLattice::partition_lattice(3);
  CHECK(lower_solution_set(eq3, 1, LatTerm::var(0), eq3.top()).all());
  CHECK(lower_solution_set(eq3, 1, LatTerm::var(0), eq3.bottom()).count() == 1);
  LatTerm mj = LatTerm::meet(LatTerm::var(0), LatTerm::join(LatTerm::var(1), LatTerm::constant(1)));
  CHECK(has_meet_of_join(mj));
  CHECK_FALSE(join_of_meets(mj).has_value());
  CHECK_THROWS_AS(reduced_lower_solution_set(eq3, 2, mj, 0), std::invalid_argument);
  LatTerm jm = LatTerm::join(LatTerm::meet(LatTerm::var(0), LatTerm::var(1)), LatTerm::constant(2));
  CHECK_FALSE(has_meet_of_join(jm));
  for (std::size_t k = 0; k < eq3.size(); ++k) {
    CHECK(lower_solution_set(eq3, 2, jm, k) == reduced_lower_solution_set(eq3, 2, jm, k));
  }
}

TEST_CASE("centralizer examples") {
  auto cl = centralizer_lattice(FiniteMonoid::symmetric_group(3));
  CHECK(cl.sets.size() == 6);
  CHECK(centralizer_lattice(FiniteMonoid::cyclic_group(5)).sets.size() == 1);
  CHECK_THROWS_AS(centralizer_lattice(FiniteMonoid::transformation_monoid(2, {{0, 0}})),
                  std::invalid_argument);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    auto r = cmxcm_chain(n);
    CHECK(r.sizes.size() == n + 1);
    CHECK(r.strictly_increasing);
    CHECK(r.y_membership_ok);
    CHECK(r.product_form_ok);
    CHECK(r.jumps == n);
  }
}

TEST_CASE("transposition family examples") {
  auto r = debruijn_family(4);
  CHECK(r.ok());
  auto m = mtvsjn_check(4);
  CHECK(m.meet_family == 3);
  CHECK(m.join_family == 7);
  CHECK(m.meets_discrete);
  CHECK(m.joins_indiscrete);
}

TEST_CASE("generator and embedding examples") {
  auto pw = FinLattice::powerset(2);
  std::vector<Bits> ident;
  for (std::uint64_t x = 0; x < 4; ++x) ident.push_back(bits(2, x));
  CHECK(cond_ia_to_ib(pw, ident) == std::vector<std::size_t>{1, 2});
  auto c3 = FinLattice::chain(3);
  auto ji = c3.join_irreducibles();
  CHECK(cond_ia_to_ib(c3, cond_ib_to_ia(c3, ji)) == ji);
  CHECK(cond_ia_to_ib(FinLattice::chain(1), {Bits(0)}).empty());
  // Not meet-preserving: {0} and {1} meet at bottom but their images overlap.
  CHECK_THROWS_AS(cond_ia_to_ib(pw, {bits(2, 0), bits(2, 1), bits(2, 1), bits(2, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cond_ib_to_ia(pw, {1}), std::invalid_argument);
}

TEST_CASE("downset examples") {
  auto d3 = downset_embed(FinLattice::chain(3));
  CHECK(d3[0].is_subset_of(d3[1]));
  CHECK(d3[1].is_subset_of(d3[2]));
  auto eq3 = FinLattice::partition_lattice(3);
  auto d = downset_embed(eq3);
  CHECK(d.size() == 5);
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = 0; y < 5; ++y) CHECK(d[eq3.meet(x, y)] == (d[x] & d[y]));
  }
}

TEST_CASE("antichain examples") {
  CHECK(antichain_example(1).size() == 2);
  auto a2 = antichain_example(2);
  CHECK(a2.size() == 4);
  for (std::size_t i = 0; i < a2.size(); ++i) {
    CHECK(a2[i].size() == 4);
    for (std::size_t j = 0; j < a2.size(); ++j) {
      if (i != j) CHECK_FALSE(a2[i].is_subset_of(a2[j]));
    }
  }
}

TEST_CASE("jump model examples") {
  std::vector<Rational> sample;
  for (int i = 0; i < 10; ++i) sample.push_back(Rational(i, 10));
  for (auto& q : sample) q.canonicalize();
  auto r = rx2_jump_example(sample);
  CHECK(r.jumps.size() == 10);
  for (auto i : r.jumps) {
    CHECK(r.elements[i].second == 0);
    CHECK(r.elements[i + 1].second == 1);
  }
  CHECK(rx2_jump_example({}).jumps.empty());
}
