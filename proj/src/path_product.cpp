#include "coplab/path_product.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coplab {

MSet::MSet(FiniteMonoid monoid, std::uint32_t points,
           std::vector<std::uint32_t> table)
    : monoid_(std::move(monoid)), points_(points), table_(std::move(table)) {
  std::size_t m = monoid_.size();
  if (table_.size() != m * points_) {
    throw std::invalid_argument("MSet: table size");
  }
  for (auto y : table_) {
    if (y >= points_) throw std::invalid_argument("MSet: image out of range");
  }
  for (std::uint32_t x = 0; x < points_; ++x) {
    if (act(monoid_.identity(), x) != x) {
      throw std::invalid_argument("MSet: identity moves a point");
    }
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        if (act(monoid_.mul(a, b), x) != act(a, act(b, x))) {
          throw std::invalid_argument("MSet: not an action");
        }
      }
    }
  }
}

MSet MSet::natural(const FiniteMonoid& monoid) {
  if (!monoid.has_maps()) {
    throw std::invalid_argument("MSet::natural: monoid has no maps");
  }
  std::vector<std::uint32_t> table;
  for (Elem g = 0; g < monoid.size(); ++g) {
    const auto& f = monoid.map(g);
    table.insert(table.end(), f.begin(), f.end());
  }
  return MSet(monoid, monoid.degree(), std::move(table));
}

bool MSet::is_faithful() const {
  std::set<std::vector<std::uint32_t>> rows;
  for (Elem g = 0; g < monoid_.size(); ++g) {
    rows.emplace(table_.begin() + g * points_,
                 table_.begin() + (g + 1) * points_);
  }
  return rows.size() == monoid_.size();
}

std::optional<std::uint32_t> separating_point(const MSet& s,
                                              std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::uint32_t> images;
  for (std::uint32_t y = 0; y < s.points(); ++y) {
    images.clear();
    for (Elem g : elems) images.push_back(s.act(g, y));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) == images.end()) {
      return y;
    }
  }
  return std::nullopt;
}

bool strongly_faithful_up_to(const MSet& s, std::size_t k) {
  std::size_t m = s.monoid().size();
  k = std::min(k, m);
  // Separating a family separates its subfamilies, so size k suffices.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Elem> family;
    for (Elem g = 0; g < m; ++g) {
      if (pick[g]) family.push_back(g);
    }
    if (!separating_point(s, family)) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

ClosedMSet strong_closure(const MSet& s, std::size_t depth) {
  ClosedMSet out;
  out.depth = depth;
  std::vector<std::vector<std::uint32_t>> layer{{}};
  for (std::size_t d = 0; d <= depth; ++d) {
    out.tuples.insert(out.tuples.end(), layer.begin(), layer.end());
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& t : layer) {
      for (std::uint32_t y = 0; y < s.points(); ++y) {
        next.push_back(t);
        next.back().push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < out.tuples.size(); ++i) {
    index[out.tuples[i]] = i;
  }
  auto points = static_cast<std::uint32_t>(out.tuples.size());
  std::vector<std::uint32_t> table;
  table.reserve(s.monoid().size() * points);
  for (Elem g = 0; g < s.monoid().size(); ++g) {
    for (const auto& t : out.tuples) {
      std::vector<std::uint32_t> image;
      for (auto y : t) image.push_back(s.act(g, y));
      table.push_back(index.at(image));
    }
  }
  out.mset = MSet(s.monoid(), points, std::move(table));
  return out;
}

std::optional<std::size_t> changed_coord(const Tuple& a, const Tuple& b) {
  std::optional<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (out) return std::nullopt;
    out = i;
  }
  return out;
}

bool is_path(const PathPoint& x, const std::vector<MSet>& factors) {
  if (x.empty()) return false;
  for (const auto& t : x) {
    if (t.size() != factors.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= factors[i].points()) return false;
    }
  }
  std::optional<std::size_t> prev;
  for (std::size_t r = 1; r < x.size(); ++r) {
    auto c = changed_coord(x[r - 1], x[r]);
    if (!c || c == prev) return false;
    prev = c;
  }
  return true;
}

PathPoint path_act(const std::vector<MSet>& factors, std::size_t j, Elem g,
                   const PathPoint& x) {
  const Tuple& last = x.back();
  Tuple moved = last;
  moved[j] = factors[j].act(g, last[j]);
  if (moved == last) return x;
  std::size_t n = x.size();
  if (n == 1 || changed_coord(x[n - 2], last) != j) {
    PathPoint out = x;
    out.push_back(std::move(moved));
    return out;
  }
  PathPoint out(x.begin(), x.end() - 1);
  if (moved != x[n - 2]) out.push_back(std::move(moved));
  return out;
}

PathPoint path_eval(const std::vector<MSet>& factors,
                    const std::vector<Letter<Elem>>& letters,
                    const PathPoint& x) {
  PathPoint y = x;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    y = path_act(factors, it->tag, it->elem, y);
  }
  return y;
}

PathPoint phi_j(const PathPoint& x, std::size_t j) {
  std::size_t n = x.size();
  if (n > 1 && changed_coord(x[n - 2], x[n - 1]) == j) return x;
  PathPoint out = x;
  out.push_back(x.back());
  return out;
}

PathPoint phi_j_inverse(const PathPoint& y, std::size_t /*j*/) {
  std::size_t n = y.size();
  if (n < 2) throw std::invalid_argument("phi_j_inverse: too short");
  if (y[n - 2] == y[n - 1]) return PathPoint(y.begin(), y.end() - 1);
  return y;
}

bool in_box_j(const PathPoint& y, std::size_t j,
              const std::vector<MSet>& factors) {
  std::size_t n = y.size();
  if (n < 2) return false;
  if (!is_path(PathPoint(y.begin(), y.end() - 1), factors)) return false;
  if (y[n - 1].size() != factors.size() ||
      y[n - 1][j] >= factors[j].points()) {
    return false;
  }
  if (y[n - 2] != y[n - 1] && changed_coord(y[n - 2], y[n - 1]) != j) {
    return false;
  }
  return n == 2 || changed_coord(y[n - 3], y[n - 2]) != j;
}

PathPoint simple_act(const std::vector<MSet>& factors, std::size_t j, Elem g,
                     const PathPoint& y) {
  PathPoint out = y;
  out.back()[j] = factors[j].act(g, y.back()[j]);
  return out;
}

std::vector<PathPoint> enumerate_paths(const std::vector<MSet>& factors,
                                       std::size_t max_len) {
  std::vector<PathPoint> out;
  if (max_len == 0) return out;
  std::vector<PathPoint> layer;
  Tuple t(factors.size(), 0);
  // All starting tuples, odometer order.
  while (true) {
    layer.push_back({t});
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == factors[i].points()) t[i++] = 0;
    if (i == t.size()) break;
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<PathPoint> next;
    for (const auto& x : layer) {
      std::optional<std::size_t> prev;
      if (x.size() > 1) prev = changed_coord(x[x.size() - 2], x.back());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (prev == i) continue;
        for (std::uint32_t v = 0; v < factors[i].points(); ++v) {
          if (v == x.back()[i]) continue;
          PathPoint y = x;
          y.push_back(x.back());
          y.back()[i] = v;
          next.push_back(std::move(y));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::optional<PathWitness> faithful_witness(const TableWord& g,
                                            const TableWord& h,
                                            const std::vector<MSet>& factors) {
  if (g == h) throw std::invalid_argument("faithful_witness: g == h");
  Tuple x1(factors.size(), 0);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const FiniteMonoid& m = factors[j].monoid();
    // Partial products g_{r_k} ... g_{r_1} of the letters from factor j.
    std::vector<Elem> family{m.identity()};
    for (const TableWord* w : {&g, &h}) {
      Elem prod = m.identity();
      for (std::size_t k = 1; k <= w->size(); ++k) {
        const auto& l = w->from_right(k);
        if (l.tag != j) continue;
        prod = m.mul(l.elem, prod);
        family.push_back(prod);
      }
    }
    auto y = separating_point(factors[j], family);
    if (!y) return std::nullopt;
    x1[j] = *y;
  }
  PathWitness out;
  out.x = {x1};
  out.gx = path_eval(factors, g, out.x);
  out.hx = path_eval(factors, h, out.x);
  if (out.gx == out.hx) {
    // Equal partial products from different words; only possible without
    // right cancellation.
    for (const auto& f : factors) {
      if (!right_cancellative(f.monoid())) return std::nullopt;
    }
    throw std::logic_error("faithful_witness: separated lists, equal paths");
  }
  return out;
}

bool right_cancellative(const FiniteMonoid& m) {
  for (Elem c = 0; c < m.size(); ++c) {
    std::vector<bool> hit(m.size(), false);
    for (Elem a = 0; a < m.size(); ++a) {
      Elem ac = m.mul(a, c);
      if (hit[ac]) return false;
      hit[ac] = true;
    }
  }
  return true;
}

std::string to_string(const PathPoint& x) {
  std::string out = "(";
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (r) out += ",";
    out += "(";
    for (std::size_t i = 0; i < x[r].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(x[r][i]);
    }
    out += ")";
  }
  return out + ")";
}

}  // namespace coplab
