#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coplab/coproduct.hpp"
#include "coplab/finite_monoid.hpp"

namespace coplab {

// Left action of a finite monoid on {0, ..., points-1}.
class MSet {
 public:
  MSet() = default;
  // table[g * points + x] is g.x. Throws std::invalid_argument unless this is
  // a monoid action.
  MSet(FiniteMonoid monoid, std::uint32_t points,
       std::vector<std::uint32_t> table);
  // A transformation monoid on its own degree.
  static MSet natural(const FiniteMonoid& monoid);

  const FiniteMonoid& monoid() const { return monoid_; }
  std::uint32_t points() const { return points_; }
  std::uint32_t act(Elem g, std::uint32_t x) const {
    return table_[g * points_ + x];
  }
  bool is_faithful() const;

 private:
  FiniteMonoid monoid_;
  std::uint32_t points_ = 0;
  std::vector<std::uint32_t> table_;
};

// Some point whose images under the distinct members of elems are distinct.
std::optional<std::uint32_t> separating_point(const MSet& s,
                                              std::vector<Elem> elems);
// Every family of at most k distinct elements has a separating point.
bool strongly_faithful_up_to(const MSet& s, std::size_t k);

// Disjoint union of the powers S^0, ..., S^depth with the diagonal action.
struct ClosedMSet {
  MSet mset;
  std::vector<std::vector<std::uint32_t>> tuples;  // point i is tuples[i]
  std::size_t depth = 0;
};
ClosedMSet strong_closure(const MSet& s, std::size_t depth);

using Tuple = std::vector<std::uint32_t>;
// Steps x_1, ..., x_n of a path in the product of the carriers.
using PathPoint = std::vector<Tuple>;

// The single coordinate where a and b differ, if there is exactly one.
std::optional<std::size_t> changed_coord(const Tuple& a, const Tuple& b);
bool is_path(const PathPoint& x, const std::vector<MSet>& factors);

PathPoint path_act(const std::vector<MSet>& factors, std::size_t j, Elem g,
                   const PathPoint& x);
// Applies letters right to left; the word need not be reduced.
PathPoint path_eval(const std::vector<MSet>& factors,
                    const std::vector<Letter<Elem>>& letters,
                    const PathPoint& x);
inline PathPoint path_eval(const std::vector<MSet>& factors,
                           const TableWord& w, const PathPoint& x) {
  return path_eval(factors, w.letters(), x);
}

// Paths whose final step changed coordinate j; others get their final tuple
// repeated.
PathPoint phi_j(const PathPoint& x, std::size_t j);
PathPoint phi_j_inverse(const PathPoint& y, std::size_t j);
// Membership in the j-th auxiliary set: length >= 2, prefix is a path, last
// step trivial or in coordinate j, previous step not in coordinate j.
bool in_box_j(const PathPoint& y, std::size_t j,
              const std::vector<MSet>& factors);
// g acts on the j coordinate of the final tuple only.
PathPoint simple_act(const std::vector<MSet>& factors, std::size_t j, Elem g,
                     const PathPoint& y);

// All paths with at most max_len steps.
std::vector<PathPoint> enumerate_paths(const std::vector<MSet>& factors,
                                       std::size_t max_len);

struct PathWitness {
  PathPoint x;  // a single step
  PathPoint gx, hx;
};
// nullopt when some factor has no point separating its partial-product list
// (a deeper closure may then succeed), or when a factor without right
// cancellation makes the two paths coincide. Throws std::invalid_argument if
// g == h.
std::optional<PathWitness> faithful_witness(const TableWord& g,
                                            const TableWord& h,
                                            const std::vector<MSet>& factors);

// ac = bc implies a = b.
bool right_cancellative(const FiniteMonoid& m);

std::string to_string(const PathPoint& x);

}  // namespace coplab
