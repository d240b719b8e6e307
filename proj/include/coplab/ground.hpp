#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coplab {

using Point = std::uint32_t;

// Endomap of the naturals that is the identity off a finite exception table.
// Maps act on the left: compose(f, g)(p) = f(g(p)).
class FinSuppEndo {
 public:
  using Entry = std::pair<Point, Point>;

  FinSuppEndo() = default;

  // Identity entries are dropped; a repeated key throws std::invalid_argument.
  static FinSuppEndo from_pairs(std::vector<Entry> pairs);
  static FinSuppEndo transposition(Point a, Point b);
  static FinSuppEndo from_cycles(const std::vector<std::vector<Point>>& cycles);
  // images[p] is the image of p for p < images.size().
  static FinSuppEndo from_images(const std::vector<Point>& images);

  Point operator()(Point p) const {
    // Tables are tiny; a linear scan beats binary search.
    for (const auto& [k, v] : table_) {
      if (k >= p) return k == p ? v : p;
    }
    return p;
  }

  const std::vector<Entry>& exceptions() const { return table_; }
  std::vector<Point> support() const;
  bool is_identity() const { return table_.empty(); }
  bool moves(Point p) const { return (*this)(p) != p; }

  friend bool operator==(const FinSuppEndo&, const FinSuppEndo&) = default;
  friend auto operator<=>(const FinSuppEndo&, const FinSuppEndo&) = default;

 private:
  std::vector<Entry> table_;  // sorted by key, no p -> p entries
};

Point eval(const FinSuppEndo& f, Point p);
FinSuppEndo compose(const FinSuppEndo& f, const FinSuppEndo& g);
bool is_permutation(const FinSuppEndo& f);
// Throws std::invalid_argument unless f is a permutation.
FinSuppEndo inverse(const FinSuppEndo& f);

// Union of graphs of per-block maps; maps[i] must carry blocks[i] into itself
// and fix everything outside it.
FinSuppEndo block_product_embed(const std::vector<std::vector<Point>>& blocks,
                                const std::vector<FinSuppEndo>& maps);

// Cycle notation "(0 1)(2 3 4)" for permutations ("()" for the identity),
// otherwise "{0:1,1:2}".
std::string to_string(const FinSuppEndo& f);
// Accepts either syntax above.
FinSuppEndo parse_endo(std::string_view text);

struct LevelPoint {
  Point p = 0;
  std::uint32_t k = 0;

  friend bool operator==(const LevelPoint&, const LevelPoint&) = default;
  friend auto operator<=>(const LevelPoint&, const LevelPoint&) = default;
};

std::string to_string(const LevelPoint& x);

// Product of disjoint transpositions of Omega x omega.
class LevelInvolution {
 public:
  using Pair = std::pair<LevelPoint, LevelPoint>;

  LevelInvolution() = default;
  // Throws std::invalid_argument if a pair is degenerate or pairs overlap.
  static LevelInvolution from_pairs(std::vector<Pair> pairs);

  LevelPoint operator()(const LevelPoint& x) const;
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t support_size() const { return 2 * pairs_.size(); }

  // Reuses storage; same checks as from_pairs.
  void assign(const std::vector<Pair>& pairs);
  void clear() { pairs_.clear(); }
  // Throws std::invalid_argument if the pair is degenerate or overlaps.
  void add_pair(const LevelPoint& a, const LevelPoint& b);
  // Caller has already established disjointness.
  void add_pair_unchecked(const LevelPoint& a, const LevelPoint& b) {
    pairs_.emplace_back(a, b);
  }

 private:
  std::vector<Pair> pairs_;
};

LevelPoint apply_involution(const LevelInvolution& t, const LevelPoint& x);

}  // namespace coplab
