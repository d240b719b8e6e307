#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coplab/ground.hpp"

namespace coplab {

using Elem = std::uint32_t;

// Monoid on {0, ..., size-1} given by a full multiplication table.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;
  // Throws std::invalid_argument on a malformed table, a non-identity
  // `identity`, or a failed associativity check.
  FiniteMonoid(std::size_t size, std::vector<Elem> table, Elem identity,
               std::vector<std::string> names = {});

  static FiniteMonoid symmetric_group(Point n);
  static FiniteMonoid cyclic_group(std::uint32_t n);
  static FiniteMonoid direct_product(const FiniteMonoid& a,
                                     const FiniteMonoid& b);
  // Closure of the given maps of {0..degree-1} under composition, identity
  // included. Elements keep their maps for naming and for `image`.
  static FiniteMonoid transformation_monoid(
      Point degree, const std::vector<std::vector<Point>>& generators);

  std::size_t size() const { return size_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * size_ + b]; }
  std::optional<Elem> inverse(Elem a) const;
  bool is_group() const;
  bool is_commutative() const;

  const std::string& name(Elem a) const { return names_[a]; }
  // Looks up by name, falling back to the element's map when the monoid has
  // one (so "(1 0)" finds "(0 1)"). Throws std::invalid_argument.
  Elem parse(std::string_view text) const;

  // For transformation monoids: the underlying map of {0..degree-1}.
  bool has_maps() const { return !maps_.empty(); }
  Point degree() const { return degree_; }
  const std::vector<Point>& map(Elem a) const { return maps_.at(a); }

 private:
  std::size_t size_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<std::string> names_;
  Point degree_ = 0;
  std::vector<std::vector<Point>> maps_;
};

bool is_associative(std::size_t size, const std::vector<Elem>& table);

}  // namespace coplab
