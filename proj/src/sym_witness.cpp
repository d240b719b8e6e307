#include "coplab/sym_witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coplab {

bool aligned(const EndoWord& g, const EndoWord& h) {
  if (g.size() != h.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].tag != h[i].tag) return false;
  }
  return true;
}

bool needs_swap(const EndoWord& g, const EndoWord& h) {
  if (g.size() != h.size()) return g.size() < h.size();
  if (!aligned(g, h)) return false;
  for (std::size_t k = 1; k <= g.size(); ++k) {
    const FinSuppEndo& gk = g.from_right(k).elem;
    const FinSuppEndo& hk = h.from_right(k).elem;
    if (gk == hk) continue;
    for (const auto& [p, q] : gk.exceptions()) {
      if (hk(p) != q) return false;
    }
    return true;
  }
  throw std::invalid_argument("orient_pair: words are equal");
}

std::pair<EndoWord, EndoWord> orient_pair(const EndoWord& g,
                                          const EndoWord& h) {
  if (needs_swap(g, h)) return {h, g};
  return {g, h};
}

namespace {

void choose_points_into(const EndoWord& g, const EndoWord& h,
                        std::vector<Point>& out, bool al) {
  std::size_t n = g.size();
  out.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& ex = g.from_right(k).elem.exceptions();
    if (ex.empty()) {
      throw std::invalid_argument("choose_points: identity letter");
    }
    Point pick = ex.front().first;
    if (al) {
      const FinSuppEndo& hk = h.from_right(k).elem;
      for (const auto& [p, q] : ex) {
        if (hk(p) != q) {
          pick = p;
          break;
        }
      }
    }
    out[k - 1] = pick;
  }
}

void build_involution_into(const std::vector<Point>& points, const EndoWord& g,
                           LevelInvolution& t) {
  std::size_t n = g.size();
  if (points.size() != n || n == 0) {
    throw std::invalid_argument("build_involution: need one point per letter");
  }
  // Pair j has its first point on level j and its second on level j+1, so
  // two pairs can only meet on a shared level: check those, and degeneracy.
  t.clear();
  t.add_pair_unchecked({points[0], 0}, {points[0], 1});
  for (std::uint32_t k = 1; k <= n; ++k) {
    Point moved = g.from_right(k).elem(points[k - 1]);
    LevelPoint upper = k < n ? LevelPoint{points[k], k + 1}
                             : LevelPoint{moved, k + 1};
    LevelPoint lower{moved, k};
    if (lower == t.pairs().back().second) {
      throw std::invalid_argument("build_involution: g_" + std::to_string(k) +
                                  " fixes p_" + std::to_string(k));
    }
    t.add_pair_unchecked(lower, upper);
  }
}

void pad_into(const EndoWord& word, const EndoWord& first, PadSeq& out) {
  out.clear();
  bool left = !first.empty() && first[0].tag == kAlpha;
  bool right = !first.empty() && first.from_right(1).tag == kAlpha;
  if (left) out.push_back(PadStep::t());
  for (std::uint32_t i = 0; i < word.size(); ++i) {
    if (word[i].tag == kAlpha) {
      out.push_back(PadStep::letter(i));
    } else {
      out.push_back(PadStep::t());
      out.push_back(PadStep::letter(i));
      out.push_back(PadStep::t());
    }
  }
  if (right) out.push_back(PadStep::t());
}

void trace_into(const PadSeq& seq, const EndoWord& word,
                const LevelInvolution& t, LevelPoint x,
                std::vector<LevelPoint>& out) {
  out.clear();
  out.push_back(x);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->kind == PadStep::kT) {
      x = t(x);
    } else {
      x.p = word[it->index].elem(x.p);
    }
    out.push_back(x);
  }
}

// For t from build_involution, pair j joins levels j and j+1, so a point at
// level k can only sit in pair k-1 or pair k.
inline LevelPoint leveled_t(const LevelInvolution::Pair* pairs, std::size_t np,
                            const LevelPoint& x) {
  if (x.k < np) {
    const auto& [a, b] = pairs[x.k];
    if (a == x) return b;
  }
  if (x.k >= 1 && x.k - 1 < np) {
    const auto& [a, b] = pairs[x.k - 1];
    if (b == x) return a;
  }
  return x;
}

void leveled_trace_into(const PadSeq& seq, const EndoWord& word,
                        const LevelInvolution& t, LevelPoint x,
                        std::vector<LevelPoint>& out) {
  const auto* pairs = t.pairs().data();
  std::size_t np = t.pairs().size();
  const Letter<FinSuppEndo>* letters = word.letters().data();
  out.resize(seq.size() + 1);
  LevelPoint* o = out.data();
  *o++ = x;
  for (std::size_t i = seq.size(); i-- > 0;) {
    const PadStep step = seq[i];
    if (step.kind == PadStep::kT) {
      x = leveled_t(pairs, np, x);
    } else {
      x.p = letters[step.index].elem(x.p);
    }
    *o++ = x;
  }
}

}  // namespace

std::vector<Point> choose_points(const EndoWord& g, const EndoWord& h) {
  std::vector<Point> out;
  choose_points_into(g, h, out, aligned(g, h));
  return out;
}

LevelInvolution build_involution(const std::vector<Point>& points,
                                 const EndoWord& g) {
  LevelInvolution t;
  build_involution_into(points, g, t);
  return t;
}

PadSeq pad_with_t(const EndoWord& word, const EndoWord& first) {
  PadSeq out;
  pad_into(word, first, out);
  return out;
}

std::vector<LevelPoint> evaluate_trace(const PadSeq& seq, const EndoWord& word,
                                       const LevelInvolution& t,
                                       LevelPoint start) {
  std::vector<LevelPoint> out;
  trace_into(seq, word, t, start, out);
  return out;
}

void distinguish_into(const EndoWord& g0, const EndoWord& h0,
                      SymWitness& out) {
  out.swapped = needs_swap(g0, h0);
  const EndoWord& g = out.swapped ? h0 : g0;
  const EndoWord& h = out.swapped ? g0 : h0;
  choose_points_into(g, h, out.points, aligned(g, h));
  build_involution_into(out.points, g, out.t);
  out.start = {out.points[0], 0};
  pad_into(g, g, out.adjusted_g);
  pad_into(h, g, out.adjusted_h);
  leveled_trace_into(out.adjusted_g, g, out.t, out.start, out.trace_g);
  leveled_trace_into(out.adjusted_h, h, out.t, out.start, out.trace_h);
}

SymWitness distinguish(const EndoWord& g, const EndoWord& h) {
  SymWitness w;
  distinguish_into(g, h, w);
  return w;
}

namespace {
constexpr std::size_t kCacheLimit = 64;
}  // namespace

SymDistinguisher::SymDistinguisher(const EndoWord& g) : g_(g) {
  cache_.reserve(kCacheLimit);  // entries never move: work_from_ stays valid
  pad_into(g_, g_, self_pad_);
  if (g_.empty()) return;
  plain_.swapped = false;
  choose_points_into(g_, EndoWord{}, plain_.points, false);
  build_involution_into(plain_.points, g_, plain_.t);
  plain_.start = {plain_.points[0], 0};
  plain_.adjusted_g = self_pad_;
  leveled_trace_into(plain_.adjusted_g, g_, plain_.t, plain_.start,
                     plain_.trace_g);
}

const SymWitness& SymDistinguisher::against(const EndoWord& h) {
  if (g_.size() < h.size()) {
    work_pads_current_ = false;
    work_from_ = nullptr;
    distinguish_into(g_, h, work_);
    return work_;
  }
  if (!aligned(g_, h)) {
    // The padded sequence depends on h only through its length and first tag.
    std::size_t shape = h.empty() ? 0 : 2 * h.size() + h[0].tag;
    if (shape != plain_shape_) {
      pad_into(h, g_, plain_.adjusted_h);
      plain_shape_ = shape;
    }
    leveled_trace_into(plain_.adjusted_h, h, plain_.t, plain_.start,
                       plain_.trace_h);
    return plain_;
  }
  // Same shape: every padded sequence coincides with self_pad_.
  work_.swapped = needs_swap(g_, h);
  const EndoWord& g = work_.swapped ? h : g_;
  const EndoWord& hh = work_.swapped ? g_ : h;
  choose_points_into(g, hh, work_.points, true);
  work_.start = {work_.points[0], 0};
  if (!work_pads_current_) {
    work_.adjusted_g = self_pad_;
    work_.adjusted_h = self_pad_;
    work_pads_current_ = true;
  }
  const Cached* hit = nullptr;
  if (!work_.swapped) {
    for (const auto& c : cache_) {
      if (c.points == work_.points) {
        hit = &c;
        break;
      }
    }
    if (!hit && cache_.size() < kCacheLimit) {
      Cached c;
      c.points = work_.points;
      build_involution_into(c.points, g, c.t);
      leveled_trace_into(self_pad_, g, c.t, work_.start, c.trace_g);
      cache_.push_back(std::move(c));
      hit = &cache_.back();
    }
  }
  if (hit) {
    if (work_from_ != hit) {
      work_.t = hit->t;
      work_.trace_g = hit->trace_g;
      work_from_ = hit;
    }
  } else {
    work_from_ = nullptr;
    build_involution_into(work_.points, g, work_.t);
    leveled_trace_into(self_pad_, g, work_.t, work_.start, work_.trace_g);
  }
  leveled_trace_into(self_pad_, hh, work_.t, work_.start, work_.trace_h);
  return work_;
}

bool group_case_check(const SymWitness& w, const EndoWord& g0,
                      const EndoWord& h0) {
  const EndoWord& g = w.swapped ? h0 : g0;
  const EndoWord& h = w.swapped ? g0 : h0;
  std::set<Point> pts{w.start.p};
  for (const EndoWord* word : {&g, &h}) {
    for (const auto& l : word->letters()) {
      if (!is_permutation(l.elem)) {
        throw std::invalid_argument("group_case_check: non-permutation letter");
      }
      for (const auto& e : l.elem.exceptions()) pts.insert(e.first);
    }
  }
  std::uint32_t top = 0;
  for (const auto& [a, b] : w.t.pairs()) {
    pts.insert(a.p);
    pts.insert(b.p);
    top = std::max({top, a.k, b.k});
  }
  std::set<LevelPoint> window;
  for (Point p : pts) {
    for (std::uint32_t k = 0; k <= top; ++k) window.insert({p, k});
  }
  auto permutes = [&](const PadSeq& seq, const EndoWord& word) {
    for (const auto& step : seq) {
      std::set<LevelPoint> image;
      for (const auto& x : window) {
        LevelPoint y = step.kind == PadStep::kT
                           ? w.t(x)
                           : LevelPoint{word[step.index].elem(x.p), x.k};
        if (!window.count(y)) return false;
        image.insert(y);
      }
      if (image.size() != window.size()) return false;
    }
    return true;
  };
  return permutes(w.adjusted_g, g) && permutes(w.adjusted_h, h);
}

std::string to_string(const PadSeq& seq, const EndoWord& word) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    if (seq[i].kind == PadStep::kT) {
      out += 't';
    } else {
      const auto& l = word[seq[i].index];
      out += tag_name(l.tag) + ":" + to_string(l.elem);
    }
  }
  return out;
}

}  // namespace coplab
