#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "coplab/finite_monoid.hpp"
#include "coplab/partition.hpp"
#include "coplab/rational.hpp"
#include "coplab/rng.hpp"

namespace coplab {

using Bits = boost::dynamic_bitset<>;

// Finite lattice on elements 0..size-1. Arbitrary meets and joins are finite
// folds here.
class FinLattice {
 public:
  FinLattice() = default;
  // order[x * size + y] iff x <= y. Throws std::invalid_argument unless this is
  // a partial order in which every pair has a meet and a join.
  FinLattice(std::size_t size, std::vector<bool> order,
             std::vector<std::string> names = {});

  static FinLattice chain(std::size_t k);
  // Subsets of {0..k-1}, element = mask.
  static FinLattice powerset(std::size_t k);
  // Bottom, k pairwise incomparable atoms, top.
  static FinLattice m_k(std::size_t k);
  // Eq(n) in enumerate_partitions order, ordered by refinement.
  static FinLattice partition_lattice(std::uint32_t n);
  // Family ordered by inclusion; throws unless intersection-closed with a
  // greatest member.
  static FinLattice from_sets(const std::vector<Bits>& sets,
                              std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size_ + y]; }
  bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  // x < y with nothing strictly between.
  bool covers(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const {
    return meet_[x * size_ + y];
  }
  std::size_t join(std::size_t x, std::size_t y) const {
    return join_[x * size_ + y];
  }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t meet_all(const std::vector<std::size_t>& xs) const;
  std::size_t join_all(const std::vector<std::size_t>& xs) const;
  std::vector<std::size_t> join_irreducibles() const;
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;
  const std::string& name(std::size_t x) const { return names_[x]; }

 private:
  std::size_t size_ = 0;
  std::vector<bool> leq_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
  std::vector<std::string> names_;
};

// Adjacent covering pairs of an ascending chain. Throws std::invalid_argument
// unless chain[i] < chain[i+1] throughout.
std::size_t jumps_in_chain(const FinLattice& lat,
                           const std::vector<std::size_t>& chain);
// Bottom, then repeatedly the least-indexed cover, up to top.
std::vector<std::size_t> maximal_chain(const FinLattice& lat);

// Intersection closure of a family of subsets of a universe of the given
// size, universe included; sorted by size, then by bits.
std::vector<Bits> intersection_closure(std::vector<Bits> sets,
                                       std::size_t universe);

// Words over the monoid with variables t_0..t_{J-1} and constants.
struct Symbol {
  bool variable = false;
  std::uint32_t index = 0;  // variable index or element
};
using MonoidWord = std::vector<Symbol>;
struct Equation {
  MonoidWord v, w;
};
struct SolutionSystem {
  const FiniteMonoid* algebra = nullptr;
  std::size_t arity = 1;
  std::vector<Equation> equations;
};

// Tuple index in mixed radix, t_0 most significant.
std::vector<Elem> decode_tuple(std::size_t base, std::size_t arity,
                               std::size_t index);
std::size_t tuple_count(std::size_t base, std::size_t arity);
Elem eval_word(const FiniteMonoid& m, const MonoidWord& w,
               const std::vector<Elem>& a);
// Tuples satisfying every equation; no equations gives A^J.
Bits solution_set(const SolutionSystem& sys);
// Principal sets {a : v(a) = w(a)} for all words of length <= bound, deduped
// by the functions they define.
std::vector<Bits> principal_solution_sets(const FiniteMonoid& m,
                                          std::size_t arity,
                                          std::size_t bound = 4);
struct SetLattice {
  FinLattice lattice;
  std::vector<Bits> sets;
};
SetLattice lattice_of_solutions(const std::vector<Bits>& principal,
                                std::size_t universe);
SetLattice solution_lattice(const FiniteMonoid& m, std::size_t arity,
                            std::size_t bound = 4);

// S_a = {x : x x_b = y for all b > a}, a = 0..n, in the transformations of
// {0..n} with y constant 0 and x_i fixing i and sending the rest to 0.
struct EqprodReport {
  std::vector<std::size_t> sizes;
  bool strictly_increasing = false;
  bool membership_ok = false;  // x_c in S_a iff c <= a
};
EqprodReport eqprod_chain(std::uint32_t n);

// Lattice terms in variables, constants, meet and join.
struct LatTerm {
  enum class Kind { kVar, kConst, kMeet, kJoin };
  Kind kind = Kind::kVar;
  std::size_t index = 0;
  std::shared_ptr<const LatTerm> left, right;

  static LatTerm var(std::size_t i);
  static LatTerm constant(std::size_t c);
  static LatTerm meet(LatTerm a, LatTerm b);
  static LatTerm join(LatTerm a, LatTerm b);
};
std::size_t eval_term(const FinLattice& lat, const LatTerm& t,
                      const std::vector<std::size_t>& a);
std::string to_string(const LatTerm& t);
// {a in A^J : v(a) <= c}.
Bits lower_solution_set(const FinLattice& lat, std::size_t arity,
                        const LatTerm& v, std::size_t c);
// Some meet has a join below it.
bool has_meet_of_join(const LatTerm& t);
// v as a join of meets of atoms; nullopt when v has a meet of joins.
std::optional<std::vector<std::vector<LatTerm>>> join_of_meets(
    const LatTerm& v);
// The same set through the rewrite v(a) <= c iff c /\ m_r(a) = m_r(a) for
// every meet m_r, i.e. membership in an intersection of equational sets.
// Throws std::invalid_argument on a meet of joins.
Bits reduced_lower_solution_set(const FinLattice& lat, std::size_t arity,
                                const LatTerm& v, std::size_t c);

// C_G(X).
Bits centralizer(const FiniteMonoid& g, const Bits& x);
// All centralizers, double-centralizer closure checked (std::logic_error).
// Throws std::invalid_argument unless g is a group.
SetLattice centralizer_lattice(const FiniteMonoid& g);

// Chain C(X_a), a = -1..n-1, in (S_3)^n with X_a = {x_b : b > a}.
struct CmxcmReport {
  std::uint32_t n = 0;
  std::vector<std::size_t> sizes;
  bool strictly_increasing = false;
  bool y_membership_ok = false;  // y_c in C(X_a) iff c <= a
  bool product_form_ok = false;  // each C(X_a) is a product of S_3 centralizers
  std::size_t jumps = 0;         // covers in the centralizer lattice
};
CmxcmReport cmxcm_chain(std::uint32_t n);

// x_i = (0 i), i = 1..n, in S_{n+1}.
struct DebruijnReport {
  std::uint32_t n = 0;
  bool involutions_ok = false;
  bool pairs_order3 = false;       // x_i x_j of order 3, i != j
  bool quads_order5 = false;       // distinct four-fold products of order 5
  bool full_product_cycle = false; // x_1 ... x_n an (n+1)-cycle
  bool collapse_ok = false;        // g^3 = g^10 = 1 forces g = 1 in S_6
  // {(y,z) : (x_{2b+1} x_{2b+2} y z)^5 = 1 for all b > a}, a = -1..n/2-1.
  std::vector<std::size_t> chain_sizes;
  bool chain_ok = false;
  bool ok() const {
    return involutions_ok && pairs_order3 && quads_order5 &&
           full_product_cycle && collapse_ok && chain_ok;
  }
};
DebruijnReport debruijn_family(std::uint32_t n);

struct MtvsjnReport {
  std::uint32_t n = 0;
  std::size_t meet_family = 0, join_family = 0;
  bool meets_discrete = false;
  bool joins_indiscrete = false;
};
MtvsjnReport mtvsjn_check(std::uint32_t n);

// f(x) subsets of {0..kappa-1}. Throws std::invalid_argument unless f is
// injective and preserves binary meets and top.
std::vector<std::size_t> cond_ia_to_ib(const FinLattice& lat,
                                       const std::vector<Bits>& f);
// x -> {a : g_a <= x}. Throws std::invalid_argument unless every x is the
// join of the g_a below it.
std::vector<Bits> cond_ib_to_ia(const FinLattice& lat,
                                const std::vector<std::size_t>& g);
// D(x) = {y : y <= x}; injectivity and meet preservation checked.
std::vector<Bits> downset_embed(const FinLattice& lat);
// (s x {0}) u (s^c x {1}) for all subsets s of {0..k-1}; point (a,i) is
// 2a+i. Pairwise incomparability checked.
std::vector<Bits> antichain_example(std::uint32_t k);

// Sample x {0,1} ordered lexicographically; jumps are the pairs (r,0) < (r,1),
// the only covers in the dense ambient order.
struct Rx2Chain {
  std::vector<std::pair<Rational, int>> elements;
  std::vector<std::size_t> jumps;  // index i: elements[i] < elements[i+1]
};
Rx2Chain rx2_jump_example(std::vector<Rational> sample);

// Intersection closure of random subsets of {0..k-1}, rejected until it has
// at most max_size members.
SetLattice random_closure_lattice(Rng& rng, std::size_t k,
                                  std::size_t max_size = 8);

std::string to_string(const Bits& b);

}  // namespace coplab
