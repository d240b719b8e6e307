#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "coplab/ground.hpp"
#include "coplab/partition.hpp"
#include "coplab/rational.hpp"

namespace coplab {

using FinSubset = std::set<Point>;

// Least-cardinality s (lexicographically first among those) with the traces
// r_i & s pairwise distinct. Throws std::invalid_argument on repeated input.
FinSubset find_separator(const std::vector<FinSubset>& rs);
bool separates(const FinSubset& s, const std::vector<FinSubset>& rs);

FinSubset restrict_cs(const FinSubset& r, const FinSubset& s);

// Free generator x_{s, r & s} of the factor indexed by s.
struct GenLabel {
  FinSubset s;
  FinSubset trace;

  friend bool operator==(const GenLabel&, const GenLabel&) = default;
  friend auto operator<=>(const GenLabel&, const GenLabel&) = default;
};

std::vector<FinSubset> all_subsets(Point n);
// Components of X_r indexed by every subset of {0..n-1}, in all_subsets order.
std::vector<GenLabel> build_Xr(const FinSubset& r, Point n);

// Free monoid word over letters 0..k-1.
using FreeWord = std::vector<std::size_t>;

struct FreeTupleWitness {
  FinSubset s;
  std::vector<GenLabel> projected_v;
  std::vector<GenLabel> projected_w;
};

// Throws std::invalid_argument if v == w or a letter is out of range.
FreeTupleWitness verify_free_tuple(const std::vector<FinSubset>& rs,
                                   const FreeWord& v, const FreeWord& w);

// Binary code of sub relative to sorted s; throws unless sub is inside s.
std::uint64_t es_code(const FinSubset& s, const FinSubset& sub);
// Code of every subset of s, indexed by code.
std::vector<FinSubset> enumerate_es(const FinSubset& s);

// Left inverse of an injective map {0..n-1} -> X; unlisted points go to 0.
template <class X>
class LeftInverse {
 public:
  explicit LeftInverse(const std::vector<X>& a) {
    if (a.empty()) throw std::invalid_argument("left_inverse: n = 0");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!inv_.emplace(a[i], i).second) {
        throw std::invalid_argument("left_inverse: map not injective");
      }
    }
  }
  std::size_t operator()(const X& x) const {
    auto it = inv_.find(x);
    return it == inv_.end() ? 0 : it->second;
  }

 private:
  std::map<X, std::size_t> inv_;
};

template <class X>
LeftInverse<X> left_inverse(const std::vector<X>& a) {
  return LeftInverse<X>(a);
}

// min(r, n-1); throws for n = 0.
std::uint64_t diagonal_fn(std::uint64_t n, std::uint64_t r);

// q_i = r_i for i = 1..n; throws unless strictly increasing.
std::vector<Rational> rational_cuts(const std::vector<Rational>& reals);
// Greatest i with q_i <= r (1-based), else 0.
std::size_t cut_map_as(const std::vector<Rational>& cuts, const Rational& r);
// r_i, clamped to r_n past the end.
Rational section_b(const std::vector<Rational>& reals, std::size_t i);

// Monoid 1 u {x_i}, x_i x_j = x_min(i,j).
struct MinMonoidElem {
  std::optional<std::uint64_t> index;  // nullopt is the identity

  static MinMonoidElem one() { return {}; }
  static MinMonoidElem gen(std::uint64_t i) { return {i}; }

  friend bool operator==(const MinMonoidElem&, const MinMonoidElem&) = default;
  friend auto operator<=>(const MinMonoidElem&, const MinMonoidElem&) = default;
};

MinMonoidElem min_monoid_op(const MinMonoidElem& x, const MinMonoidElem& y);
MinMonoidElem min_monoid_eval(const std::vector<std::uint64_t>& gens);
// a is given on {0..|a|-1}; throws std::invalid_argument unless isotone or
// if x's index is outside the domain.
MinMonoidElem min_monoid_functor(const std::vector<std::uint64_t>& a,
                                 const MinMonoidElem& x);
bool is_isotone(const std::vector<std::uint64_t>& a);

// Least n <= nmax whose component f_n: r -> min(r, n-1) separates the two
// words, once pushed through the functor. nullopt if none does.
std::optional<std::uint64_t> diagonal_separator_free(const FreeWord& u,
                                                     const FreeWord& v,
                                                     std::uint64_t nmax);
std::optional<std::uint64_t> diagonal_separator_min(
    const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
    std::uint64_t nmax);

// Tuples coded in mixed radix with the first coordinate most significant.
Partition eq_product_embed(const std::vector<Partition>& alphas);

}  // namespace coplab
