#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace coplab {

// Equivalence relation on {0..n-1}; block ids in first-occurrence order.
class Partition {
 public:
  Partition() = default;
  // Any labeling; canonicalized.
  explicit Partition(const std::vector<std::uint32_t>& labels);

  static Partition discrete(std::uint32_t n);
  static Partition indiscrete(std::uint32_t n);
  // Finest partition with the given pairs in one block.
  static Partition generated(std::uint32_t n,
                             const std::vector<std::pair<std::uint32_t,
                                                         std::uint32_t>>& pairs);

  std::uint32_t n() const { return static_cast<std::uint32_t>(ids_.size()); }
  std::uint32_t block(std::uint32_t p) const { return ids_[p]; }
  const std::vector<std::uint32_t>& ids() const { return ids_; }
  std::uint32_t num_blocks() const;
  bool related(std::uint32_t a, std::uint32_t b) const {
    return ids_[a] == ids_[b];
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> ids_;
};

// Throw std::invalid_argument on size mismatch.
Partition eq_meet(const Partition& a, const Partition& b);
Partition eq_join(const Partition& a, const Partition& b);
// a refines b.
bool eq_leq(const Partition& a, const Partition& b);

// Restricted growth strings in lexicographic order.
std::vector<Partition> enumerate_partitions(std::uint32_t n);

// "01|2" (points joined within a block, blocks by least element).
std::string to_string(const Partition& a);

}  // namespace coplab
