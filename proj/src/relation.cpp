#include "coplab/relation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "coplab/sym_witness.hpp"

namespace coplab {

namespace {

void check_size(std::uint32_t n, std::uint32_t limit, const char* what) {
  if (n > limit) {
    throw std::invalid_argument(std::string(what) + ": ground set too large");
  }
}

Mask low_bits(std::uint32_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

}  // namespace

RelMat::RelMat(std::uint32_t n) : n_(n), rows_(n, 0) {
  check_size(n, kMaxN, "RelMat");
}

RelMat RelMat::identity(std::uint32_t n) {
  RelMat r(n);
  for (Point p = 0; p < n; ++p) r.set(p, p);
  return r;
}

RelMat RelMat::full(std::uint32_t n) {
  RelMat r(n);
  for (auto& row : r.rows_) row = low_bits(n);
  return r;
}

RelMat RelMat::from_pairs(std::uint32_t n,
                          const std::vector<std::pair<Point, Point>>& pairs) {
  RelMat r(n);
  for (const auto& [q, p] : pairs) {
    if (q >= n || p >= n) throw std::invalid_argument("RelMat: pair range");
    r.set(q, p);
  }
  return r;
}

RelMat RelMat::from_map(const FinSuppEndo& f, std::uint32_t n) {
  RelMat r(n);
  for (Point p = 0; p < n; ++p) {
    Point q = f(p);
    if (q >= n) throw std::invalid_argument("RelMat::from_map: leaves range");
    r.set(q, p);
  }
  return r;
}

RelMat RelMat::from_partition(const Partition& a) {
  RelMat r(a.n());
  for (Point q = 0; q < a.n(); ++q) {
    for (Point p = 0; p < a.n(); ++p) {
      if (a.related(q, p)) r.set(q, p);
    }
  }
  return r;
}

RelMat RelMat::box(std::uint32_t n, Mask x, Mask y) {
  RelMat r(n);
  for (Point q = 0; q < n; ++q) {
    if (x >> q & 1) r.rows_[q] = y & low_bits(n);
  }
  return r;
}

void RelMat::set(Point q, Point p, bool on) {
  if (on) {
    rows_[q] |= Mask{1} << p;
  } else {
    rows_[q] &= ~(Mask{1} << p);
  }
}

std::size_t RelMat::count() const {
  std::size_t c = 0;
  for (auto row : rows_) c += static_cast<std::size_t>(std::popcount(row));
  return c;
}

std::vector<std::pair<Point, Point>> RelMat::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point q = 0; q < n_; ++q) {
    for (Point p = 0; p < n_; ++p) {
      if (has(q, p)) out.push_back({q, p});
    }
  }
  return out;
}

bool RelMat::is_reflexive() const {
  for (Point p = 0; p < n_; ++p) {
    if (!has(p, p)) return false;
  }
  return true;
}

bool RelMat::within_diagonal() const {
  for (Point q = 0; q < n_; ++q) {
    if (rows_[q] & ~(Mask{1} << q)) return false;
  }
  return true;
}

bool RelMat::is_map() const {
  Mask seen = 0;
  for (auto row : rows_) {
    if (seen & row) return false;
    seen |= row;
  }
  return seen == low_bits(n_);
}

RelMat rel_compose(const RelMat& x, const RelMat& y) {
  if (x.n() != y.n()) throw std::invalid_argument("rel_compose: sizes");
  RelMat out(x.n());
  for (Point q = 0; q < x.n(); ++q) {
    Mask acc = 0;
    for (Mask rest = x.row(q); rest; rest &= rest - 1) {
      acc |= y.row(static_cast<Point>(std::countr_zero(rest)));
    }
    for (Mask bits = acc; bits; bits &= bits - 1) {
      out.set(q, static_cast<Point>(std::countr_zero(bits)));
    }
  }
  return out;
}

RelMat transpose(const RelMat& x) {
  RelMat out(x.n());
  for (const auto& [q, p] : x.pairs()) out.set(p, q);
  return out;
}

RelMat rel_union(const RelMat& x, const RelMat& y) {
  if (x.n() != y.n()) throw std::invalid_argument("rel_union: sizes");
  RelMat out = x;
  for (const auto& [q, p] : y.pairs()) out.set(q, p);
  return out;
}

Mask rel_image(const RelMat& g, Mask x) {
  Mask out = 0;
  for (Point q = 0; q < g.n(); ++q) {
    if (g.row(q) & x) out |= Mask{1} << q;
  }
  return out;
}

bool differs_off_diagonal(const RelMat& g, const RelMat& h) {
  if (g.n() != h.n()) return true;
  for (Point q = 0; q < g.n(); ++q) {
    Mask off = ~(Mask{1} << q);
    if ((g.row(q) & off) != (h.row(q) & off)) return true;
  }
  return false;
}

std::vector<RelMat> all_relations(std::uint32_t n) {
  check_size(n, 4, "all_relations");
  std::vector<RelMat> out;
  std::uint32_t bits = n * n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    RelMat r(n);
    for (std::uint32_t b = 0; b < bits; ++b) {
      if (code >> b & 1) r.set(b / n, b % n);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_string(const RelMat& x) {
  std::string out = "{";
  bool first = true;
  for (const auto& [q, p] : x.pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(q) + "," + std::to_string(p) + ")";
  }
  return out + "}";
}

RelMat parse_rel(std::uint32_t n, std::string_view text) {
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<Point> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      Point v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<Point>(text[i] - '0');
        ++i;
      }
      nums.push_back(v);
      continue;
    }
    if (c == ')') {
      if (nums.size() != 2) throw std::invalid_argument("parse_rel: pair");
      pairs.push_back({nums[0], nums[1]});
      nums.clear();
    } else if (c != '{' && c != '}' && c != '(' && c != ',' && c != ' ') {
      throw std::invalid_argument("parse_rel: unexpected character");
    }
    ++i;
  }
  if (!nums.empty()) throw std::invalid_argument("parse_rel: dangling number");
  return RelMat::from_pairs(n, pairs);
}

std::vector<RelMat> two_class_relations(std::uint32_t n) {
  std::vector<RelMat> out;
  for (const auto& a : enumerate_partitions(n)) {
    if (a.num_blocks() == 2) out.push_back(RelMat::from_partition(a));
  }
  return out;
}

TwoClassReport two_class_identity_check(std::uint32_t n) {
  TwoClassReport rep;
  rep.n = n;
  auto ys = two_class_relations(n);
  rep.partitions = ys.size();
  RelMat w = RelMat::full(n);
  for (const auto& y : ys) {
    RelMat yy = rel_compose(y, y);
    if (yy != y || rel_compose(yy, y) != y || y == w) rep.idempotent_ok = false;
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (i == j) continue;
      ++rep.ordered_pairs;
      if (rel_compose(rel_compose(ys[i], ys[j]), ys[i]) != w) {
        rep.triple_ok = false;
      }
    }
  }
  return rep;
}

RelChainReport two_class_chain(std::uint32_t n) {
  auto ys = two_class_relations(n);
  RelMat w = RelMat::full(n);
  std::size_t big = ys.size();
  // last[x] = largest b with y_b x y_b != w (or -1); x lies in S_a iff a >= it.
  auto last_failure = [&](const RelMat& x) -> std::ptrdiff_t {
    for (std::size_t b = big; b-- > 0;) {
      if (rel_compose(rel_compose(ys[b], x), ys[b]) != w) {
        return static_cast<std::ptrdiff_t>(b);
      }
    }
    return -1;
  };
  std::vector<std::size_t> at(big + 1, 0);
  for (const auto& x : all_relations(n)) ++at[last_failure(x) + 1];
  RelChainReport rep;
  std::size_t running = 0;
  for (auto c : at) {
    running += c;
    rep.sizes.push_back(running);
  }
  rep.strictly_increasing = true;
  for (std::size_t i = 1; i < rep.sizes.size(); ++i) {
    if (rep.sizes[i] <= rep.sizes[i - 1]) rep.strictly_increasing = false;
  }
  rep.membership_ok = true;
  for (std::size_t c = 0; c < big; ++c) {
    if (last_failure(ys[c]) != static_cast<std::ptrdiff_t>(c)) {
      rep.membership_ok = false;
    }
  }
  return rep;
}

RelMat idempotent_box(std::uint32_t n, Mask x, Mask y) {
  if (!(x & y & low_bits(n))) {
    throw std::invalid_argument("idempotent_box: X and Y disjoint");
  }
  RelMat r = RelMat::box(n, x, y);
  if (rel_compose(r, r) != r) throw std::logic_error("idempotent_box");
  return r;
}

RelMat theta_pfim(const RelMat& g) {
  check_size(g.n(), 6, "theta_pfim");
  std::uint32_t subsets = 1u << g.n();
  RelMat out(subsets);
  for (Mask s = 0; s < subsets; ++s) {
    Mask gs = rel_image(g, s);
    for (Mask t = 0; t < subsets; ++t) {
      if ((t & ~gs) == 0) out.set(static_cast<Point>(t), static_cast<Point>(s));
    }
  }
  return out;
}

RelMat declaw(const RelMat& g) {
  RelMat out(g.n() + 1);
  for (const auto& [q, p] : g.pairs()) out.set(q, p);
  out.set(g.n(), g.n());
  return out;
}

RelMat square_embed(const RelMat& g) {
  check_size(g.n(), 32, "square_embed");
  RelMat out(2 * g.n());
  for (const auto& [q, p] : g.pairs()) {
    for (Point i = 0; i < 2; ++i) {
      for (Point j = 0; j < 2; ++j) out.set(2 * q + i, 2 * p + j);
    }
  }
  return out;
}

RelMat offdiag_phi(const RelMat& g) {
  std::uint32_t n = g.n();
  check_size(n, 8, "offdiag_phi");
  RelMat out(n * n);
  auto prs = g.pairs();
  for (const auto& [p, q] : prs) {
    for (const auto& [p2, q2] : prs) out.set(p * n + p2, q * n + q2);
  }
  return out;
}

FinSuppEndo relfin_action(const RelMat& g) {
  check_size(g.n(), 16, "relfin_action");
  std::vector<Point> images;
  for (Mask x = 0; x < (Mask{1} << g.n()); ++x) {
    images.push_back(static_cast<Point>(rel_image(g, x)));
  }
  return FinSuppEndo::from_images(images);
}

FinSuppEndo eq_meet_to_se(std::uint32_t n, Mask s) {
  std::vector<FinSuppEndo::Entry> entries;
  for (Point p = 0; p < n; ++p) {
    if (!(s >> p & 1)) entries.push_back({2 * p + 1, 2 * p});
  }
  return FinSuppEndo::from_pairs(std::move(entries));
}

MonomialWitness kse_independence(const std::vector<FinSuppEndo>& gs,
                                 std::uint32_t n) {
  auto restrict_to = [n](const FinSuppEndo& g) {
    std::vector<Point> img;
    for (Point p = 0; p < n; ++p) img.push_back(g(p));
    return img;
  };
  std::set<std::vector<Point>> distinct;
  for (const auto& g : gs) distinct.insert(restrict_to(g));
  if (distinct.size() != gs.size()) {
    throw std::invalid_argument("kse_independence: maps not distinct");
  }
  for (std::uint32_t m = 1; m <= std::max<std::uint32_t>(n, 1); ++m) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + std::min(m, n), true);
    do {
      MonomialWitness w;
      for (Point p = 0; p < n; ++p) {
        if (pick[p]) w.points.push_back(p);
      }
      std::set<std::vector<Point>> seen;
      for (const auto& g : gs) {
        std::vector<Point> mono;
        for (Point p : w.points) mono.push_back(g(p));
        seen.insert(mono);
        w.images.push_back(std::move(mono));
      }
      if (seen.size() == gs.size()) return w;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw std::logic_error("kse_independence: no separating points");
}

FiniteMonoid gzz_build(std::uint32_t m) {
  if (m == 0 || m > 10) throw std::invalid_argument("gzz_build: m");
  std::uint32_t groups = 1u << m;
  std::uint32_t size = groups + 2 * m;
  std::vector<Elem> table(std::size_t{size} * size);
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      Elem prod;
      if (a >= groups) {
        prod = a;  // left zero
      } else if (b < groups) {
        prod = a ^ b;
      } else {
        std::uint32_t i = (b - groups) / 2;
        prod = (a >> i & 1) ? (b ^ 1) : b;
      }
      table[std::size_t{a} * size + b] = prod;
    }
  }
  std::vector<std::string> names;
  for (Elem a = 0; a < groups; ++a) {
    std::string s;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (a >> i & 1) s += "g" + std::to_string(i);
    }
    names.push_back(s.empty() ? "1" : s);
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    names.push_back("z" + std::to_string(i));
    names.push_back("z" + std::to_string(i) + "'");
  }
  return FiniteMonoid(size, std::move(table), 0, std::move(names));
}

std::vector<FinSuppEndo> cayley_embed(const FiniteMonoid& m) {
  std::vector<FinSuppEndo> out;
  for (Elem a = 0; a < m.size(); ++a) {
    std::vector<Point> images;
    for (Elem x = 0; x < m.size(); ++x) images.push_back(m.mul(a, x));
    out.push_back(FinSuppEndo::from_images(images));
  }
  return out;
}

RelFactorization factor_relation(const RelMat& r) {
  RelFactorization fac;
  fac.n = r.n();
  fac.size = std::max<std::uint32_t>(r.n() * r.n(), 2);
  check_size(fac.size, RelMat::kMaxN, "factor_relation");
  auto prs = r.pairs();
  if (prs.empty()) {
    fac.bar_first = true;
    fac.f.assign(fac.size, 0);
    fac.g.assign(fac.size, 1);
    return fac;
  }
  for (Point i = 0; i < fac.size; ++i) {
    const auto& [q, p] = prs[i < prs.size() ? i : 0];
    fac.f.push_back(q);
    fac.g.push_back(p);
  }
  return fac;
}

RelMat factorization_product(const RelFactorization& fac) {
  RelMat f(fac.size), g(fac.size);
  for (Point p = 0; p < fac.size; ++p) {
    f.set(fac.f[p], p);
    g.set(fac.g[p], p);
  }
  return fac.bar_first ? rel_compose(transpose(f), g)
                       : rel_compose(f, transpose(g));
}

RelMat embed_relation(const RelMat& r, std::uint32_t size) {
  if (size < r.n()) throw std::invalid_argument("embed_relation: size");
  RelMat out(size);
  for (const auto& [q, p] : r.pairs()) out.set(q, p);
  return out;
}

Coproduct<RelMat> rel_coproduct(std::uint32_t n, std::size_t copies) {
  std::vector<Factor<RelMat>> factors;
  for (std::size_t i = 0; i < copies; ++i) {
    Factor<RelMat> f;
    f.name = tag_name(i);
    f.identity = RelMat::identity(n);
    f.multiply = [](const RelMat& a, const RelMat& b) {
      return rel_compose(a, b);
    };
    f.format = [](const RelMat& a) { return to_string(a); };
    f.parse = [n](std::string_view s) { return parse_rel(n, s); };
    factors.push_back(std::move(f));
  }
  return Coproduct<RelMat>(std::move(factors));
}

bool RelWitness::certified() const {
  return std::binary_search(image_g.begin(), image_g.end(), target) &&
         !std::binary_search(image_h.begin(), image_h.end(), target);
}

namespace {

bool aligned_rel(const RelWord& g, const RelWord& h) {
  if (g.size() != h.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].tag != h[i].tag) return false;
  }
  return true;
}

// Nondiagonal pairs of a not in b.
std::vector<std::pair<Point, Point>> off_diagonal_excess(const RelMat& a,
                                                         const RelMat* b) {
  std::vector<std::pair<Point, Point>> out;
  for (const auto& [q, p] : a.pairs()) {
    if (q != p && (!b || !b->has(q, p))) out.push_back({q, p});
  }
  return out;
}

std::vector<LevelPoint> natural_image(const RelMat& g,
                                      const std::vector<LevelPoint>& xs) {
  std::set<LevelPoint> out;
  for (const auto& x : xs) {
    if (x.p >= g.n()) continue;
    for (Point q = 0; q < g.n(); ++q) {
      if (g.has(q, x.p)) out.insert({q, x.k});
    }
  }
  return {out.begin(), out.end()};
}

std::vector<LevelPoint> t_image(const LevelInvolution& t,
                                const std::vector<LevelPoint>& xs) {
  std::vector<LevelPoint> out;
  for (const auto& x : xs) out.push_back(t(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LevelPoint> rel_padded_image(const RelWord& word,
                                         const RelWord& first,
                                         const LevelInvolution& t,
                                         std::vector<LevelPoint> xs) {
  std::sort(xs.begin(), xs.end());
  bool left = !first.empty() && first[0].tag == kAlpha;
  bool right = !first.empty() && first.from_right(1).tag == kAlpha;
  if (right) xs = t_image(t, xs);
  for (std::size_t k = 1; k <= word.size(); ++k) {
    const auto& l = word.from_right(k);
    if (l.tag == kAlpha) {
      xs = natural_image(l.elem, xs);
    } else {
      xs = t_image(t, natural_image(l.elem, t_image(t, xs)));
    }
  }
  if (left) xs = t_image(t, xs);
  return xs;
}

RelWitness rel_double_witness(const RelWord& g0, const RelWord& h0) {
  if (g0 == h0) throw std::invalid_argument("rel_double_witness: g == h");
  // Letter pools per tag, identity included, must differ off the diagonal.
  std::map<std::size_t, std::vector<RelMat>> pools;
  for (const RelWord* w : {&g0, &h0}) {
    for (const auto& l : w->letters()) {
      auto& pool = pools[l.tag];
      if (pool.empty()) pool.push_back(RelMat::identity(l.elem.n()));
      if (std::find(pool.begin(), pool.end(), l.elem) == pool.end()) {
        pool.push_back(l.elem);
      }
    }
  }
  for (const auto& [tag, pool] : pools) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (!differs_off_diagonal(pool[i], pool[j])) {
          throw std::invalid_argument(
              "rel_double_witness: letters not distinguishable off the "
              "diagonal");
        }
      }
    }
  }
  RelWitness w;
  bool al = aligned_rel(g0, h0);
  if (g0.size() != h0.size()) {
    w.swapped = g0.size() < h0.size();
  } else if (al) {
    for (std::size_t k = 1; k <= g0.size(); ++k) {
      const RelMat& gk = g0.from_right(k).elem;
      const RelMat& hk = h0.from_right(k).elem;
      if (gk == hk) continue;
      w.swapped = off_diagonal_excess(gk, &hk).empty();
      break;
    }
  }
  const RelWord& g = w.swapped ? h0 : g0;
  const RelWord& h = w.swapped ? g0 : h0;
  std::uint32_t n = static_cast<std::uint32_t>(g.size());
  for (std::size_t k = 1; k <= n; ++k) {
    const RelMat& gk = g.from_right(k).elem;
    auto options = al ? off_diagonal_excess(gk, &h.from_right(k).elem)
                      : decltype(off_diagonal_excess(gk, nullptr)){};
    if (options.empty()) options = off_diagonal_excess(gk, nullptr);
    if (options.empty()) {
      throw std::logic_error("rel_double_witness: letter within diagonal");
    }
    w.chosen.push_back(options.front());
  }
  if (n == 0) throw std::logic_error("rel_double_witness: empty first word");
  std::vector<LevelInvolution::Pair> pairs;
  Point p1 = w.chosen[0].second;
  pairs.push_back({{p1, 0}, {p1, 1}});
  for (std::uint32_t k = 1; k < n; ++k) {
    pairs.push_back({{w.chosen[k - 1].first, k}, {w.chosen[k].second, k + 1}});
  }
  Point qn = w.chosen[n - 1].first;
  pairs.push_back({{qn, n}, {qn, n + 1}});
  w.t = LevelInvolution::from_pairs(std::move(pairs));
  w.start = {p1, 0};
  w.target = {qn, n + 1};
  w.image_g = rel_padded_image(g, g, w.t, {w.start});
  w.image_h = rel_padded_image(h, g, w.t, {w.start});
  return w;
}

}  // namespace coplab
