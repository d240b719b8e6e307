#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coplab/ground.hpp"
#include "coplab/rational.hpp"

namespace coplab {

using RatMatrix = std::vector<std::vector<Rational>>;

// Rank by Gaussian elimination over Q.
std::size_t rank(RatMatrix rows);

// scalar * 1 + finite matrix on the space with basis the naturals.
class RatOperator {
 public:
  using Index = std::pair<Point, Point>;  // (row q, column p)

  RatOperator() = default;
  static RatOperator identity() { return scalar_op(1); }
  static RatOperator scalar_op(Rational s);
  // E(q,p): sends basis vector p to q, every other basis vector to 0.
  static RatOperator unit(Point q, Point p);

  const Rational& scalar() const { return scalar_; }
  const std::map<Index, Rational>& matrix() const { return matrix_; }
  Rational entry(Point q, Point p) const;  // includes the scalar part
  bool is_zero() const { return scalar_ == 0 && matrix_.empty(); }
  // Points occurring as row or column indices.
  std::vector<Point> indices() const;

  void add_entry(Point q, Point p, const Rational& c);

  friend RatOperator operator+(const RatOperator& a, const RatOperator& b);
  friend RatOperator operator-(const RatOperator& a, const RatOperator& b);
  friend RatOperator operator*(const RatOperator& a, const RatOperator& b);
  friend RatOperator operator*(const Rational& c, const RatOperator& a);
  friend bool operator==(const RatOperator&, const RatOperator&) = default;

 private:
  Rational scalar_ = 0;
  std::map<Index, Rational> matrix_;  // nonzero entries only
};

// The fixed point of the splitting En = K*1 + En_0.
inline constexpr Point kR = 0;

bool in_En0(const RatOperator& op, Point r = kR);
std::string to_string(const RatOperator& op);

// Rank of the finite matrix part; nullopt when the scalar part is nonzero.
std::optional<std::size_t> finite_rank(const RatOperator& op);

// op_i^2 = op_i != 0 and op_i op_j = 0 for i != j. Asserts (throws
// std::logic_error) that finite ranks then sum to at most the window size.
bool orthogonal_idempotent_check(const std::vector<RatOperator>& ops);

// Rows (1, a, ..., a^(m-1)); throws std::invalid_argument on duplicates or
// m < |as|.
RatMatrix vandermonde_embed(const std::vector<Rational>& as, std::size_t m);

}  // namespace coplab
