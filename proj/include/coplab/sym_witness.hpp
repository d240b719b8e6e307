#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coplab/coproduct.hpp"
#include "coplab/ground.hpp"

namespace coplab {

// Tag 0 is the alpha copy (natural action), tag 1 the beta copy (acting as
// t g t).
inline constexpr std::size_t kAlpha = 0;
inline constexpr std::size_t kBeta = 1;

struct PadStep {
  enum Kind : std::uint8_t { kLetter, kT };
  Kind kind = kT;
  std::uint32_t index = 0;  // letter position in written order

  static PadStep t() { return {kT, 0}; }
  static PadStep letter(std::uint32_t i) { return {kLetter, i}; }
  friend bool operator==(const PadStep&, const PadStep&) = default;
};

using PadSeq = std::vector<PadStep>;

struct SymWitness {
  bool swapped = false;  // true when hw was taken as the first word
  std::vector<Point> points;  // p_1..p_n
  LevelInvolution t;
  LevelPoint start;
  PadSeq adjusted_g, adjusted_h;
  std::vector<LevelPoint> trace_g, trace_h;

  std::size_t n() const { return points.size(); }
  bool reaches_top() const { return trace_g.back().k == n() + 1; }
  bool separated() const { return trace_g.back() != trace_h.back(); }
  bool valid() const { return reaches_top() && separated(); }
};

// True when the words have equal length and the same tag in every position.
bool aligned(const EndoWord& g, const EndoWord& h);
// Whether (h, g) rather than (g, h) is the oriented order. Throws
// std::invalid_argument if g == h.
bool needs_swap(const EndoWord& g, const EndoWord& h);
std::pair<EndoWord, EndoWord> orient_pair(const EndoWord& g,
                                          const EndoWord& h);

// p_1..p_n for an oriented pair.
std::vector<Point> choose_points(const EndoWord& g, const EndoWord& h);
// Throws std::invalid_argument if some g_k fixes p_k.
LevelInvolution build_involution(const std::vector<Point>& points,
                                 const EndoWord& g);
// Beta letters conjugated by T; T added on each side where `first` has an
// alpha letter at that end.
PadSeq pad_with_t(const EndoWord& word, const EndoWord& first);
inline PadSeq pad_with_t(const EndoWord& word) { return pad_with_t(word, word); }
// Applies seq right to left; the trace includes the start point.
std::vector<LevelPoint> evaluate_trace(const PadSeq& seq, const EndoWord& word,
                                       const LevelInvolution& t,
                                       LevelPoint start);

SymWitness distinguish(const EndoWord& g, const EndoWord& h);
// Allocation-free once `out` has grown to size.
void distinguish_into(const EndoWord& g, const EndoWord& h, SymWitness& out);

// distinguish(g, h) for a fixed g and many h: the state that depends on g
// alone is computed once. Results are identical to distinguish().
class SymDistinguisher {
 public:
  explicit SymDistinguisher(const EndoWord& g);
  // The reference stays valid until the next call.
  const SymWitness& against(const EndoWord& h);

 private:
  const EndoWord& g_;
  PadSeq self_pad_;
  SymWitness plain_;  // g first, unaligned h: points do not depend on h
  SymWitness work_;
  bool work_pads_current_ = false;
  std::size_t plain_shape_ = static_cast<std::size_t>(-1);
  // Same-shape h with g first: t and trace_g depend only on the points.
  struct Cached {
    std::vector<Point> points;
    LevelInvolution t;
    std::vector<LevelPoint> trace_g;
  };
  std::vector<Cached> cache_;
  const Cached* work_from_ = nullptr;  // cache entry currently held by work_
};

// All letters must be permutations (std::invalid_argument otherwise). True iff
// every step of both padded sequences permutes the touched window of levels.
bool group_case_check(const SymWitness& w, const EndoWord& g,
                      const EndoWord& h);

std::string to_string(const PadSeq& seq, const EndoWord& word);

}  // namespace coplab
