#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coplab/coproduct.hpp"
#include "coplab/finite_monoid.hpp"
#include "coplab/ground.hpp"
#include "coplab/partition.hpp"

namespace coplab {

// Subsets of {0..63} as bit masks.
using Mask = std::uint64_t;

// Binary relation on {0, ..., n-1}, n <= 64; row q holds the p with (q,p) in
// the relation. A map f is the relation {(f(p), p)}.
class RelMat {
 public:
  static constexpr std::uint32_t kMaxN = 64;

  RelMat() = default;
  explicit RelMat(std::uint32_t n);  // empty relation
  static RelMat identity(std::uint32_t n);
  static RelMat full(std::uint32_t n);
  static RelMat from_pairs(std::uint32_t n,
                           const std::vector<std::pair<Point, Point>>& pairs);
  // {(f(p), p) : p < n}; f must keep {0..n-1}.
  static RelMat from_map(const FinSuppEndo& f, std::uint32_t n);
  static RelMat from_partition(const Partition& a);
  // X x Y.
  static RelMat box(std::uint32_t n, Mask x, Mask y);

  std::uint32_t n() const { return n_; }
  bool has(Point q, Point p) const { return rows_[q] >> p & 1; }
  void set(Point q, Point p, bool on = true);
  Mask row(Point q) const { return rows_[q]; }
  std::size_t count() const;
  std::vector<std::pair<Point, Point>> pairs() const;

  bool is_reflexive() const;
  bool within_diagonal() const;
  // Every column p has exactly one q.
  bool is_map() const;

  friend bool operator==(const RelMat&, const RelMat&) = default;
  friend auto operator<=>(const RelMat&, const RelMat&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Mask> rows_;
};

// x y = {(q,p) : (q,r) in x, (r,p) in y for some r}. Throws on size mismatch.
RelMat rel_compose(const RelMat& x, const RelMat& y);
RelMat transpose(const RelMat& x);
RelMat rel_union(const RelMat& x, const RelMat& y);
// gX = {q : (q,p) in g for some p in X}.
Mask rel_image(const RelMat& g, Mask x);
// The set differences from the identity relation are unequal.
bool differs_off_diagonal(const RelMat& g, const RelMat& h);
// All 2^(n*n) relations; n <= 4.
std::vector<RelMat> all_relations(std::uint32_t n);

// "{(0,1),(1,2)}" with pairs sorted.
std::string to_string(const RelMat& x);
RelMat parse_rel(std::uint32_t n, std::string_view text);

struct TwoClassReport {
  std::uint32_t n = 0;
  std::size_t partitions = 0;
  std::size_t ordered_pairs = 0;
  bool idempotent_ok = true;  // y y = y, y y y = y != full
  bool triple_ok = true;      // y_i y_j y_i = full for i != j
  bool ok() const { return idempotent_ok && triple_ok; }
};
// Two-class equivalence relations on {0..n-1}, n >= 2.
std::vector<RelMat> two_class_relations(std::uint32_t n);
TwoClassReport two_class_identity_check(std::uint32_t n);

// Sizes of S_a = {x in Rel(n) : y_b x y_b = full for all b > a}, for
// a = -1, 0, ..., N-1 over the N two-class relations; n <= 4.
struct RelChainReport {
  std::vector<std::size_t> sizes;
  bool strictly_increasing = false;
  bool membership_ok = false;  // y_c in S_a iff c <= a
};
RelChainReport two_class_chain(std::uint32_t n);

// X x Y checked idempotent; throws std::invalid_argument if X, Y disjoint.
RelMat idempotent_box(std::uint32_t n, Mask x, Mask y);

// On the 2^n subsets of {0..n-1}, n <= 6: (t, s) related iff t is inside gs.
RelMat theta_pfim(const RelMat& g);
// g + (z,z) on n+1 points, z = n.
RelMat declaw(const RelMat& g);
// On points 2q+i: ((q,i),(p,j)) for (q,p) in g and i, j in {0,1}; n <= 32.
RelMat square_embed(const RelMat& g);
// On points p*n+p', n <= 8: ((p,p'),(q,q')) for (p,q), (p',q') in g.
RelMat offdiag_phi(const RelMat& g);

// X -> gX as a map of the subset masks 0..2^n-1, n <= 16.
FinSuppEndo relfin_action(const RelMat& g);

// On points 2p+i of {0..n-1} x 2: fixes (p,0), and (p,1) for p in S, sends
// (p,1) to (p,0) otherwise.
FinSuppEndo eq_meet_to_se(std::uint32_t n, Mask s);

// Points p_1..p_m of {0..n-1}, m minimal, on which the maps in gs pairwise
// disagree somewhere, with the image monomial of each map. m >= 1.
struct MonomialWitness {
  std::vector<Point> points;
  std::vector<std::vector<Point>> images;
};
// Throws std::invalid_argument if two maps agree on {0..n-1}.
MonomialWitness kse_independence(const std::vector<FinSuppEndo>& gs,
                                 std::uint32_t n);

// Group (Z_2)^m as masks 0..2^m-1 (identity 0), then z_i = 2^m + 2i and
// z'_i = 2^m + 2i + 1. Associativity is checked by FiniteMonoid.
FiniteMonoid gzz_build(std::uint32_t m);
// Left regular representation a -> (x -> a x).
std::vector<FinSuppEndo> cayley_embed(const FiniteMonoid& m);

// R = f gbar on a padded ground set of size N = max(n*n, 2), where f and g
// are maps of {0..N-1} and gbar = {(p, g(p))}; for empty R, R = fbar g with
// disjoint ranges instead.
struct RelFactorization {
  std::uint32_t n = 0;
  std::uint32_t size = 0;
  std::vector<Point> f, g;
  bool bar_first = false;  // fbar g rather than f gbar
};
RelFactorization factor_relation(const RelMat& r);
// The relation the factorization denotes, on all `size` points.
RelMat factorization_product(const RelFactorization& fac);
// r on the first r.n() of `size` points.
RelMat embed_relation(const RelMat& r, std::uint32_t size);

// Relation letters in a coproduct of copies of Rel(n).
Coproduct<RelMat> rel_coproduct(std::uint32_t n, std::size_t copies = 2);
using RelWord = CopWord<RelMat>;

// Points of Omega x omega as (p, k).
struct RelWitness {
  bool swapped = false;
  std::vector<std::pair<Point, Point>> chosen;  // (q_k, p_k), k = 1..n
  LevelInvolution t;
  LevelPoint start, target;  // (p_1, 0) and (q_n, n+1)
  std::vector<LevelPoint> image_g, image_h;  // images of {start}
  bool certified() const;
};
// Throws std::invalid_argument if g == h or some tag class (identity
// included) has two letters equal off the diagonal.
RelWitness rel_double_witness(const RelWord& g, const RelWord& h);
// Image of a finite set under the padded composite, t on the alpha ends of
// `first`, beta letters conjugated by t.
std::vector<LevelPoint> rel_padded_image(const RelWord& word,
                                         const RelWord& first,
                                         const LevelInvolution& t,
                                         std::vector<LevelPoint> xs);

}  // namespace coplab
