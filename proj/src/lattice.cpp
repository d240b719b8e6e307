#include "coplab/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coplab {

FinLattice::FinLattice(std::size_t size, std::vector<bool> order,
                       std::vector<std::string> names)
    : size_(size), leq_(std::move(order)), names_(std::move(names)) {
  if (size_ == 0) throw std::invalid_argument("FinLattice: empty");
  if (leq_.size() != size_ * size_) {
    throw std::invalid_argument("FinLattice: order table size");
  }
  if (names_.empty()) {
    for (std::size_t x = 0; x < size_; ++x) names_.push_back(std::to_string(x));
  }
  if (names_.size() != size_) throw std::invalid_argument("FinLattice: names");
  for (std::size_t x = 0; x < size_; ++x) {
    if (!leq(x, x)) throw std::invalid_argument("FinLattice: not reflexive");
    for (std::size_t y = 0; y < size_; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) {
        throw std::invalid_argument("FinLattice: not antisymmetric");
      }
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < size_; ++z) {
        if (leq(y, z) && !leq(x, z)) {
          throw std::invalid_argument("FinLattice: not transitive");
        }
      }
    }
  }
  std::vector<std::size_t> below(size_, 0), above(size_, 0);
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      if (leq(y, x)) ++below[x];
      if (leq(x, y)) ++above[x];
    }
  }
  meet_.assign(size_ * size_, 0);
  join_.assign(size_ * size_, 0);
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = x; y < size_; ++y) {
      // The bound with most elements below (above) it, then checked.
      std::optional<std::size_t> m, j;
      for (std::size_t z = 0; z < size_; ++z) {
        if (leq(z, x) && leq(z, y) && (!m || below[z] > below[*m])) m = z;
        if (leq(x, z) && leq(y, z) && (!j || above[z] > above[*j])) j = z;
      }
      if (!m || !j) throw std::invalid_argument("FinLattice: missing bound");
      for (std::size_t z = 0; z < size_; ++z) {
        if (leq(z, x) && leq(z, y) && !leq(z, *m)) {
          throw std::invalid_argument("FinLattice: no meet");
        }
        if (leq(x, z) && leq(y, z) && !leq(*j, z)) {
          throw std::invalid_argument("FinLattice: no join");
        }
      }
      meet_[x * size_ + y] = meet_[y * size_ + x] = *m;
      join_[x * size_ + y] = join_[y * size_ + x] = *j;
    }
  }
  top_ = 0;
  for (std::size_t x = 1; x < size_; ++x) top_ = join(top_, x);
  bottom_ = 0;
  for (std::size_t x = 1; x < size_; ++x) bottom_ = meet(bottom_, x);
}

FinLattice FinLattice::chain(std::size_t k) {
  std::vector<bool> leq(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x; y < k; ++y) leq[x * k + y] = true;
  }
  return FinLattice(k, std::move(leq));
}

FinLattice FinLattice::powerset(std::size_t k) {
  if (k > 10) throw std::invalid_argument("FinLattice::powerset: k > 10");
  std::size_t n = std::size_t{1} << k;
  std::vector<bool> leq(n * n);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (!(x >> i & 1)) continue;
      if (s.size() > 1) s += ",";
      s += std::to_string(i);
    }
    names.push_back(s + "}");
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = (x & ~y) == 0;
  }
  return FinLattice(n, std::move(leq), std::move(names));
}

FinLattice FinLattice::m_k(std::size_t k) {
  std::size_t n = k + 2;
  std::vector<bool> leq(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    leq[x * n + x] = true;
    leq[0 * n + x] = true;
    leq[x * n + n - 1] = true;
  }
  return FinLattice(n, std::move(leq));
}

FinLattice FinLattice::partition_lattice(std::uint32_t n) {
  auto parts = enumerate_partitions(n);
  std::size_t m = parts.size();
  std::vector<bool> leq(m * m);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < m; ++x) {
    names.push_back(to_string(parts[x]));
    for (std::size_t y = 0; y < m; ++y) {
      leq[x * m + y] = eq_leq(parts[x], parts[y]);
    }
  }
  return FinLattice(m, std::move(leq), std::move(names));
}

FinLattice FinLattice::from_sets(const std::vector<Bits>& sets,
                                 std::vector<std::string> names) {
  std::size_t n = sets.size();
  std::set<Bits> seen(sets.begin(), sets.end());
  if (seen.size() != n) throw std::invalid_argument("from_sets: duplicates");
  bool has_top = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (sets[x].size() != sets[0].size()) {
      throw std::invalid_argument("from_sets: universe mismatch");
    }
    bool top = true;
    for (std::size_t y = 0; y < n && top; ++y) top = sets[y].is_subset_of(sets[x]);
    has_top = has_top || top;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!seen.count(sets[x] & sets[y])) {
        throw std::invalid_argument("from_sets: not intersection-closed");
      }
    }
  }
  if (!has_top) throw std::invalid_argument("from_sets: no greatest set");
  std::vector<bool> leq(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      leq[x * n + y] = sets[x].is_subset_of(sets[y]);
    }
  }
  if (names.empty()) {
    for (const auto& s : sets) names.push_back(to_string(s));
  }
  return FinLattice(n, std::move(leq), std::move(names));
}

bool FinLattice::covers(std::size_t x, std::size_t y) const {
  if (!lt(x, y)) return false;
  for (std::size_t z = 0; z < size_; ++z) {
    if (lt(x, z) && lt(z, y)) return false;
  }
  return true;
}

std::size_t FinLattice::meet_all(const std::vector<std::size_t>& xs) const {
  std::size_t out = top_;
  for (auto x : xs) out = meet(out, x);
  return out;
}

std::size_t FinLattice::join_all(const std::vector<std::size_t>& xs) const {
  std::size_t out = bottom_;
  for (auto x : xs) out = join(out, x);
  return out;
}

std::vector<std::size_t> FinLattice::join_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size_; ++x) {
    if (x == bottom_) continue;
    std::size_t lower = 0;
    for (std::size_t y = 0; y < size_; ++y) lower += covers(y, x);
    if (lower == 1) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinLattice::covering_pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      if (covers(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::size_t jumps_in_chain(const FinLattice& lat,
                           const std::vector<std::size_t>& chain) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= lat.size()) {
      throw std::invalid_argument("jumps_in_chain: element out of range");
    }
    if (i == 0) continue;
    if (!lat.lt(chain[i - 1], chain[i])) {
      throw std::invalid_argument("jumps_in_chain: not an ascending chain");
    }
    out += lat.covers(chain[i - 1], chain[i]);
  }
  return out;
}

std::vector<std::size_t> maximal_chain(const FinLattice& lat) {
  std::vector<std::size_t> out{lat.bottom()};
  while (out.back() != lat.top()) {
    for (std::size_t y = 0; y < lat.size(); ++y) {
      if (lat.covers(out.back(), y)) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

namespace {

bool by_size(const Bits& a, const Bits& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace

std::vector<Bits> intersection_closure(std::vector<Bits> sets,
                                       std::size_t universe) {
  std::set<Bits> closed;
  std::vector<Bits> work;
  Bits all(universe);
  all.set();
  sets.push_back(all);
  for (auto& s : sets) {
    if (s.size() != universe) {
      throw std::invalid_argument("intersection_closure: universe mismatch");
    }
    if (closed.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    Bits s = std::move(work.back());
    work.pop_back();
    std::vector<Bits> fresh;
    for (const auto& t : closed) {
      Bits m = s & t;
      if (!closed.count(m)) fresh.push_back(std::move(m));
    }
    for (auto& m : fresh) {
      if (closed.insert(m).second) work.push_back(std::move(m));
    }
  }
  std::vector<Bits> out(closed.begin(), closed.end());
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

std::size_t tuple_count(std::size_t base, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (base != 0 && n > (std::size_t{1} << 24) / base) {
      throw std::invalid_argument("tuple_count: too many tuples");
    }
    n *= base;
  }
  return n;
}

std::vector<Elem> decode_tuple(std::size_t base, std::size_t arity,
                               std::size_t index) {
  std::vector<Elem> out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = static_cast<Elem>(index % base);
    index /= base;
  }
  return out;
}

Elem eval_word(const FiniteMonoid& m, const MonoidWord& w,
               const std::vector<Elem>& a) {
  Elem out = m.identity();
  for (const auto& s : w) {
    Elem x = s.variable ? a.at(s.index) : s.index;
    if (x >= m.size()) throw std::invalid_argument("eval_word: bad constant");
    out = m.mul(out, x);
  }
  return out;
}

Bits solution_set(const SolutionSystem& sys) {
  if (!sys.algebra) throw std::invalid_argument("solution_set: no algebra");
  const FiniteMonoid& m = *sys.algebra;
  std::size_t n = tuple_count(m.size(), sys.arity);
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto a = decode_tuple(m.size(), sys.arity, i);
    bool ok = true;
    for (const auto& e : sys.equations) {
      if (eval_word(m, e.v, a) != eval_word(m, e.w, a)) {
        ok = false;
        break;
      }
    }
    out[i] = ok;
  }
  return out;
}

std::vector<Bits> principal_solution_sets(const FiniteMonoid& m,
                                          std::size_t arity,
                                          std::size_t bound) {
  std::size_t n = tuple_count(m.size(), arity);
  std::vector<std::vector<Elem>> tuples;
  for (std::size_t i = 0; i < n; ++i) {
    tuples.push_back(decode_tuple(m.size(), arity, i));
  }
  using Fn = std::vector<Elem>;
  std::set<Fn> seen{Fn(n, m.identity())};
  std::vector<Fn> frontier(seen.begin(), seen.end());
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<Fn> next;
    for (const auto& f : frontier) {
      for (std::size_t s = 0; s < arity + m.size(); ++s) {
        Fn g(n);
        for (std::size_t i = 0; i < n; ++i) {
          Elem x = s < arity ? tuples[i][s] : static_cast<Elem>(s - arity);
          g[i] = m.mul(x, f[i]);
        }
        if (seen.insert(g).second) next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Fn> fns(seen.begin(), seen.end());
  std::set<Bits> sets;
  Bits all(n);
  all.set();
  sets.insert(all);
  for (std::size_t a = 0; a < fns.size(); ++a) {
    for (std::size_t b = a + 1; b < fns.size(); ++b) {
      Bits eq(n);
      for (std::size_t i = 0; i < n; ++i) eq[i] = fns[a][i] == fns[b][i];
      sets.insert(std::move(eq));
    }
  }
  std::vector<Bits> out(sets.begin(), sets.end());
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

SetLattice lattice_of_solutions(const std::vector<Bits>& principal,
                                std::size_t universe) {
  SetLattice out;
  out.sets = intersection_closure(principal, universe);
  out.lattice = FinLattice::from_sets(out.sets);
  return out;
}

SetLattice solution_lattice(const FiniteMonoid& m, std::size_t arity,
                            std::size_t bound) {
  return lattice_of_solutions(principal_solution_sets(m, arity, bound),
                              tuple_count(m.size(), arity));
}

EqprodReport eqprod_chain(std::uint32_t n) {
  if (n < 1 || n > 5) throw std::invalid_argument("eqprod_chain: n in 1..5");
  std::uint32_t d = n + 1;
  auto compose = [&](const std::vector<Point>& f, const std::vector<Point>& g) {
    std::vector<Point> out(d);
    for (Point p = 0; p < d; ++p) out[p] = f[g[p]];
    return out;
  };
  std::vector<Point> y(d, 0);
  std::vector<std::vector<Point>> xs(d);  // xs[i], i = 1..n
  for (Point i = 1; i < d; ++i) {
    xs[i].assign(d, 0);
    xs[i][i] = i;
  }
  auto member = [&](const std::vector<Point>& x, std::uint32_t a) {
    for (Point b = a + 1; b < d; ++b) {
      if (compose(x, xs[b]) != y) return false;
    }
    return true;
  };
  EqprodReport out;
  out.membership_ok = true;
  for (std::uint32_t a = 0; a <= n; ++a) {
    std::size_t count = 0;
    std::vector<Point> x(d, 0);
    while (true) {
      count += member(x, a);
      std::size_t i = 0;
      while (i < d && ++x[i] == d) x[i++] = 0;
      if (i == d) break;
    }
    out.sizes.push_back(count);
    for (Point c = 1; c < d; ++c) {
      if (member(xs[c], a) != (c <= a)) out.membership_ok = false;
    }
  }
  out.strictly_increasing = true;
  for (std::size_t i = 1; i < out.sizes.size(); ++i) {
    if (out.sizes[i] <= out.sizes[i - 1]) out.strictly_increasing = false;
  }
  return out;
}

LatTerm LatTerm::var(std::size_t i) {
  LatTerm t;
  t.kind = Kind::kVar;
  t.index = i;
  return t;
}

LatTerm LatTerm::constant(std::size_t c) {
  LatTerm t;
  t.kind = Kind::kConst;
  t.index = c;
  return t;
}

LatTerm LatTerm::meet(LatTerm a, LatTerm b) {
  LatTerm t;
  t.kind = Kind::kMeet;
  t.left = std::make_shared<const LatTerm>(std::move(a));
  t.right = std::make_shared<const LatTerm>(std::move(b));
  return t;
}

LatTerm LatTerm::join(LatTerm a, LatTerm b) {
  LatTerm t = meet(std::move(a), std::move(b));
  t.kind = Kind::kJoin;
  return t;
}

std::size_t eval_term(const FinLattice& lat, const LatTerm& t,
                      const std::vector<std::size_t>& a) {
  switch (t.kind) {
    case LatTerm::Kind::kVar:
      return a.at(t.index);
    case LatTerm::Kind::kConst:
      if (t.index >= lat.size()) {
        throw std::invalid_argument("eval_term: bad constant");
      }
      return t.index;
    case LatTerm::Kind::kMeet:
      return lat.meet(eval_term(lat, *t.left, a), eval_term(lat, *t.right, a));
    case LatTerm::Kind::kJoin:
      return lat.join(eval_term(lat, *t.left, a), eval_term(lat, *t.right, a));
  }
  return 0;
}

std::string to_string(const LatTerm& t) {
  switch (t.kind) {
    case LatTerm::Kind::kVar:
      return "t" + std::to_string(t.index);
    case LatTerm::Kind::kConst:
      return "c" + std::to_string(t.index);
    case LatTerm::Kind::kMeet:
      return "(" + to_string(*t.left) + " ^ " + to_string(*t.right) + ")";
    case LatTerm::Kind::kJoin:
      return "(" + to_string(*t.left) + " v " + to_string(*t.right) + ")";
  }
  return {};
}

namespace {

template <class F>
Bits tuples_where(std::size_t base, std::size_t arity, F pred) {
  std::size_t n = tuple_count(base, arity);
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto t = decode_tuple(base, arity, i);
    out[i] = pred(std::vector<std::size_t>(t.begin(), t.end()));
  }
  return out;
}

bool contains_join(const LatTerm& t) {
  if (t.kind == LatTerm::Kind::kJoin) return true;
  if (t.kind == LatTerm::Kind::kMeet) {
    return contains_join(*t.left) || contains_join(*t.right);
  }
  return false;
}

void meet_atoms(const LatTerm& t, std::vector<LatTerm>& out) {
  if (t.kind == LatTerm::Kind::kMeet) {
    meet_atoms(*t.left, out);
    meet_atoms(*t.right, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

Bits lower_solution_set(const FinLattice& lat, std::size_t arity,
                        const LatTerm& v, std::size_t c) {
  return tuples_where(lat.size(), arity, [&](const auto& a) {
    return lat.leq(eval_term(lat, v, a), c);
  });
}

bool has_meet_of_join(const LatTerm& t) {
  switch (t.kind) {
    case LatTerm::Kind::kMeet:
      return contains_join(*t.left) || contains_join(*t.right);
    case LatTerm::Kind::kJoin:
      return has_meet_of_join(*t.left) || has_meet_of_join(*t.right);
    default:
      return false;
  }
}

std::optional<std::vector<std::vector<LatTerm>>> join_of_meets(
    const LatTerm& v) {
  if (has_meet_of_join(v)) return std::nullopt;
  std::vector<std::vector<LatTerm>> out;
  if (v.kind == LatTerm::Kind::kJoin) {
    auto l = join_of_meets(*v.left);
    auto r = join_of_meets(*v.right);
    out = std::move(*l);
    out.insert(out.end(), r->begin(), r->end());
  } else {
    out.emplace_back();
    meet_atoms(v, out.back());
  }
  return out;
}

Bits reduced_lower_solution_set(const FinLattice& lat, std::size_t arity,
                                const LatTerm& v, std::size_t c) {
  auto dnf = join_of_meets(v);
  if (!dnf) {
    throw std::invalid_argument("reduced_lower_solution_set: meet of joins");
  }
  Bits out = tuples_where(lat.size(), arity, [](const auto&) { return true; });
  for (const auto& atoms : *dnf) {
    LatTerm m = atoms.front();
    for (std::size_t i = 1; i < atoms.size(); ++i) {
      m = LatTerm::meet(m, atoms[i]);
    }
    // c ^ m = m, an equation with a constant.
    LatTerm lhs = LatTerm::meet(LatTerm::constant(c), m);
    out &= tuples_where(lat.size(), arity, [&](const auto& a) {
      return eval_term(lat, lhs, a) == eval_term(lat, m, a);
    });
  }
  return out;
}

Bits centralizer(const FiniteMonoid& g, const Bits& x) {
  Bits out(g.size());
  for (Elem h = 0; h < g.size(); ++h) {
    bool ok = true;
    for (auto a = x.find_first(); a != Bits::npos && ok; a = x.find_next(a)) {
      ok = g.mul(h, static_cast<Elem>(a)) == g.mul(static_cast<Elem>(a), h);
    }
    out[h] = ok;
  }
  return out;
}

SetLattice centralizer_lattice(const FiniteMonoid& g) {
  if (!g.is_group()) throw std::invalid_argument("centralizer_lattice: group");
  std::vector<Bits> singles;
  for (Elem a = 0; a < g.size(); ++a) {
    Bits x(g.size());
    x[a] = true;
    singles.push_back(centralizer(g, x));
  }
  SetLattice out;
  out.sets = intersection_closure(std::move(singles), g.size());
  for (const auto& h : out.sets) {
    if (centralizer(g, centralizer(g, h)) != h) {
      throw std::logic_error("centralizer_lattice: not double-centralizer closed");
    }
  }
  out.lattice = FinLattice::from_sets(out.sets);
  return out;
}

CmxcmReport cmxcm_chain(std::uint32_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("cmxcm_chain: n in 1..6");
  FiniteMonoid s3 = FiniteMonoid::symmetric_group(3);
  Elem a = 0, b = 0;
  for (Elem u = 0; u < s3.size() && a == b; ++u) {
    for (Elem v = 0; v < s3.size(); ++v) {
      if (s3.mul(u, v) != s3.mul(v, u)) {
        a = u;
        b = v;
        break;
      }
    }
  }
  std::size_t size = tuple_count(s3.size(), n);
  std::vector<std::vector<Elem>> elems;
  for (std::size_t i = 0; i < size; ++i) {
    elems.push_back(decode_tuple(s3.size(), n, i));
  }
  auto commute = [&](const std::vector<Elem>& g, const std::vector<Elem>& h) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (s3.mul(g[i], h[i]) != s3.mul(h[i], g[i])) return false;
    }
    return true;
  };
  auto unit = [&](std::uint32_t i, Elem e) {
    std::vector<Elem> t(n, s3.identity());
    t[i] = e;
    return t;
  };
  auto index_of = [&](const std::vector<Elem>& t) {
    std::size_t i = 0;
    for (auto e : t) i = i * s3.size() + e;
    return i;
  };

  SetLattice s3_lat = centralizer_lattice(s3);
  std::map<Bits, std::size_t> s3_index;
  for (std::size_t i = 0; i < s3_lat.sets.size(); ++i) {
    s3_index[s3_lat.sets[i]] = i;
  }

  CmxcmReport out;
  out.n = n;
  out.y_membership_ok = true;
  out.product_form_ok = true;
  std::vector<std::vector<std::size_t>> coords;  // S_3 lattice index per coordinate
  for (int alpha = -1; alpha < static_cast<int>(n); ++alpha) {
    std::vector<std::vector<Elem>> x;
    for (auto beta = static_cast<std::uint32_t>(alpha + 1); beta < n; ++beta) {
      x.push_back(unit(beta, a));
    }
    Bits c(size);
    for (std::size_t g = 0; g < size; ++g) {
      bool ok = true;
      for (const auto& xb : x) {
        if (!commute(elems[g], xb)) {
          ok = false;
          break;
        }
      }
      c[g] = ok;
    }
    out.sizes.push_back(c.count());
    for (std::uint32_t gamma = 0; gamma < n; ++gamma) {
      bool in = c[index_of(unit(gamma, b))];
      if (in != (static_cast<int>(gamma) <= alpha)) out.y_membership_ok = false;
    }
    // Commuting is coordinatewise, so C(X) is the product of its projections
    // and the centralizer lattice of the power is the product lattice.
    std::vector<Bits> proj(n, Bits(s3.size()));
    for (std::size_t g = 0; g < size; ++g) {
      if (!c[g]) continue;
      for (std::uint32_t i = 0; i < n; ++i) proj[i][elems[g][i]] = true;
    }
    std::size_t product = 1;
    std::vector<std::size_t> idx;
    for (const auto& p : proj) {
      product *= p.count();
      auto it = s3_index.find(p);
      if (it == s3_index.end()) {
        out.product_form_ok = false;
        idx.push_back(0);
      } else {
        idx.push_back(it->second);
      }
    }
    if (product != c.count()) out.product_form_ok = false;
    coords.push_back(std::move(idx));
  }
  out.strictly_increasing = true;
  for (std::size_t i = 1; i < out.sizes.size(); ++i) {
    if (out.sizes[i] <= out.sizes[i - 1]) out.strictly_increasing = false;
  }
  if (out.product_form_ok) {
    for (std::size_t i = 1; i < coords.size(); ++i) {
      std::size_t differ = 0;
      bool cover = true;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (coords[i - 1][k] == coords[i][k]) continue;
        ++differ;
        cover = s3_lat.lattice.covers(coords[i - 1][k], coords[i][k]);
      }
      out.jumps += differ == 1 && cover;
    }
  }
  return out;
}

namespace {

using Perm = std::vector<Point>;

Perm perm_mul(const Perm& f, const Perm& g) {
  Perm out(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) out[p] = f[g[p]];
  return out;
}

Perm perm_id(std::size_t d) {
  Perm out(d);
  std::iota(out.begin(), out.end(), Point{0});
  return out;
}

std::size_t perm_order(const Perm& f) {
  Perm id = perm_id(f.size());
  Perm g = f;
  std::size_t k = 1;
  while (g != id) {
    g = perm_mul(f, g);
    ++k;
  }
  return k;
}

Perm perm_pow(const Perm& f, std::size_t k) {
  Perm out = perm_id(f.size());
  for (std::size_t i = 0; i < k; ++i) out = perm_mul(f, out);
  return out;
}

}  // namespace

DebruijnReport debruijn_family(std::uint32_t n) {
  if (n < 1 || n > 5) throw std::invalid_argument("debruijn_family: n in 1..5");
  std::size_t d = n + 1;
  Perm id = perm_id(d);
  std::vector<Perm> x(d);  // x[i], i = 1..n
  for (Point i = 1; i <= n; ++i) {
    x[i] = id;
    std::swap(x[i][0], x[i][i]);
  }
  DebruijnReport out;
  out.n = n;
  out.involutions_ok = true;
  out.pairs_order3 = true;
  out.quads_order5 = true;
  for (Point i = 1; i <= n; ++i) {
    if (perm_mul(x[i], x[i]) != id) out.involutions_ok = false;
    for (Point j = 1; j <= n; ++j) {
      if (i != j && perm_order(perm_mul(x[i], x[j])) != 3) {
        out.pairs_order3 = false;
      }
      for (Point k = 1; k <= n; ++k) {
        for (Point l = 1; l <= n; ++l) {
          std::set<Point> s{i, j, k, l};
          if (s.size() != 4) continue;
          Perm p = perm_mul(perm_mul(x[i], x[j]), perm_mul(x[k], x[l]));
          if (perm_order(p) != 5) out.quads_order5 = false;
        }
      }
    }
  }
  Perm full = id;
  for (Point i = 1; i <= n; ++i) full = perm_mul(full, x[i]);
  std::size_t cycle = 1;
  for (Point p = full[0]; p != 0; p = full[p]) ++cycle;
  out.full_product_cycle = cycle == d;

  out.collapse_ok = true;
  Perm g = perm_id(6);
  do {
    if (perm_pow(g, 3) == perm_id(6) && perm_pow(g, 10) == perm_id(6) &&
        g != perm_id(6)) {
      out.collapse_ok = false;
    }
  } while (std::next_permutation(g.begin(), g.end()));

  // Pairs (x_{2b+1}, x_{2b+2}) for b < kappa.
  std::size_t kappa = n / 2;
  std::vector<Perm> group;
  Perm h = id;
  do {
    group.push_back(h);
  } while (std::next_permutation(h.begin(), h.end()));
  std::vector<Perm> lead(kappa);
  for (std::size_t b = 0; b < kappa; ++b) {
    lead[b] = perm_mul(x[2 * b + 1], x[2 * b + 2]);
  }
  // ok[b][(y,z)]: (x x' y z)^5 = 1.
  std::size_t gg = group.size();
  std::vector<Bits> ok(kappa, Bits(gg * gg));
  for (std::size_t yi = 0; yi < gg; ++yi) {
    for (std::size_t zi = 0; zi < gg; ++zi) {
      Perm yz = perm_mul(group[yi], group[zi]);
      for (std::size_t b = 0; b < kappa; ++b) {
        ok[b][yi * gg + zi] = perm_pow(perm_mul(lead[b], yz), 5) == id;
      }
    }
  }
  auto pos = [&](const Perm& p) {
    return static_cast<std::size_t>(
        std::find(group.begin(), group.end(), p) - group.begin());
  };
  out.chain_ok = true;
  for (int alpha = -1; alpha < static_cast<int>(kappa); ++alpha) {
    Bits s(gg * gg);
    s.set();
    for (auto b = static_cast<std::size_t>(alpha + 1); b < kappa; ++b) s &= ok[b];
    out.chain_sizes.push_back(s.count());
    for (std::size_t c = 0; c < kappa; ++c) {
      bool in = s[pos(x[2 * c + 1]) * gg + pos(x[2 * c + 2])];
      if (in != (static_cast<int>(c) <= alpha)) out.chain_ok = false;
    }
  }
  for (std::size_t i = 1; i < out.chain_sizes.size(); ++i) {
    if (out.chain_sizes[i] <= out.chain_sizes[i - 1]) out.chain_ok = false;
  }
  return out;
}

MtvsjnReport mtvsjn_check(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("mtvsjn_check: n >= 3");
  MtvsjnReport out;
  out.n = n;
  std::vector<Partition> meets;
  for (std::uint32_t i = 1; i < n; ++i) {
    meets.push_back(Partition::generated(n, {{0, i}}));
  }
  std::vector<Partition> joins;
  for (auto& p : enumerate_partitions(n)) {
    if (p.num_blocks() == 2) joins.push_back(std::move(p));
  }
  out.meet_family = meets.size();
  out.join_family = joins.size();
  out.meets_discrete = true;
  for (std::size_t i = 0; i < meets.size(); ++i) {
    for (std::size_t j = 0; j < meets.size(); ++j) {
      if (i != j && eq_meet(meets[i], meets[j]) != Partition::discrete(n)) {
        out.meets_discrete = false;
      }
    }
  }
  out.joins_indiscrete = true;
  for (std::size_t i = 0; i < joins.size(); ++i) {
    for (std::size_t j = 0; j < joins.size(); ++j) {
      if (i != j && eq_join(joins[i], joins[j]) != Partition::indiscrete(n)) {
        out.joins_indiscrete = false;
      }
    }
  }
  return out;
}

std::vector<std::size_t> cond_ia_to_ib(const FinLattice& lat,
                                       const std::vector<Bits>& f) {
  if (f.size() != lat.size()) {
    throw std::invalid_argument("cond_ia_to_ib: one set per element");
  }
  std::size_t kappa = f[0].size();
  for (std::size_t x = 0; x < lat.size(); ++x) {
    if (f[x].size() != kappa) {
      throw std::invalid_argument("cond_ia_to_ib: universe mismatch");
    }
    for (std::size_t y = 0; y < lat.size(); ++y) {
      if (x != y && f[x] == f[y]) {
        throw std::invalid_argument("cond_ia_to_ib: not injective");
      }
      if (f[lat.meet(x, y)] != (f[x] & f[y])) {
        throw std::invalid_argument("cond_ia_to_ib: meet not preserved");
      }
    }
  }
  if (f[lat.top()].count() != kappa) {
    throw std::invalid_argument("cond_ia_to_ib: top not preserved");
  }
  std::vector<std::size_t> g(kappa);
  for (std::size_t a = 0; a < kappa; ++a) {
    std::vector<std::size_t> xs;
    for (std::size_t x = 0; x < lat.size(); ++x) {
      if (f[x][a]) xs.push_back(x);
    }
    g[a] = lat.meet_all(xs);
  }
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::vector<std::size_t> gs;
    for (auto a = f[x].find_first(); a != Bits::npos; a = f[x].find_next(a)) {
      gs.push_back(g[a]);
    }
    if (lat.join_all(gs) != x) {
      throw std::logic_error("cond_ia_to_ib: family does not generate");
    }
  }
  return g;
}

std::vector<Bits> cond_ib_to_ia(const FinLattice& lat,
                                const std::vector<std::size_t>& g) {
  std::vector<Bits> f(lat.size(), Bits(g.size()));
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::vector<std::size_t> below;
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (g[a] >= lat.size()) {
        throw std::invalid_argument("cond_ib_to_ia: element out of range");
      }
      if (lat.leq(g[a], x)) {
        f[x][a] = true;
        below.push_back(g[a]);
      }
    }
    if (lat.join_all(below) != x) {
      throw std::invalid_argument("cond_ib_to_ia: " + lat.name(x) +
                                  " is not a join of the family");
    }
  }
  for (std::size_t x = 0; x < lat.size(); ++x) {
    for (std::size_t y = 0; y < lat.size(); ++y) {
      if ((x != y && f[x] == f[y]) || f[lat.meet(x, y)] != (f[x] & f[y])) {
        throw std::logic_error("cond_ib_to_ia: not a meet embedding");
      }
    }
  }
  return f;
}

std::vector<Bits> downset_embed(const FinLattice& lat) {
  std::vector<Bits> d(lat.size(), Bits(lat.size()));
  for (std::size_t x = 0; x < lat.size(); ++x) {
    for (std::size_t y = 0; y < lat.size(); ++y) d[x][y] = lat.leq(y, x);
  }
  for (std::size_t x = 0; x < lat.size(); ++x) {
    for (std::size_t y = 0; y < lat.size(); ++y) {
      if ((x != y && d[x] == d[y]) || d[lat.meet(x, y)] != (d[x] & d[y])) {
        throw std::logic_error("downset_embed: not a meet embedding");
      }
    }
  }
  return d;
}

std::vector<Bits> antichain_example(std::uint32_t k) {
  if (k < 1 || k > 12) throw std::invalid_argument("antichain_example: k in 1..12");
  std::vector<Bits> out;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    Bits b(2 * k);
    for (std::uint32_t a = 0; a < k; ++a) b[2 * a + (s >> a & 1 ? 0 : 1)] = true;
    out.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i != j && out[i].is_subset_of(out[j])) {
        throw std::logic_error("antichain_example: comparable pair");
      }
    }
  }
  return out;
}

Rx2Chain rx2_jump_example(std::vector<Rational> sample) {
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  Rx2Chain out;
  for (const auto& r : sample) {
    out.elements.emplace_back(r, 0);
    out.elements.emplace_back(r, 1);
  }
  for (std::size_t i = 0; i + 1 < out.elements.size(); ++i) {
    if (out.elements[i].first == out.elements[i + 1].first) out.jumps.push_back(i);
  }
  return out;
}

SetLattice random_closure_lattice(Rng& rng, std::size_t k,
                                  std::size_t max_size) {
  if (k == 0 || max_size < 1) {
    throw std::invalid_argument("random_closure_lattice: bad sizes");
  }
  while (true) {
    std::size_t m = uniform(rng, 0, k + 1);
    std::vector<Bits> gens;
    for (std::size_t i = 0; i < m; ++i) {
      Bits b(k);
      for (std::size_t p = 0; p < k; ++p) b[p] = coin(rng);
      gens.push_back(std::move(b));
    }
    auto sets = intersection_closure(std::move(gens), k);
    if (sets.size() > max_size) continue;
    SetLattice out;
    out.lattice = FinLattice::from_sets(sets);
    out.sets = std::move(sets);
    return out;
  }
}

std::string to_string(const Bits& b) {
  std::string out = "{";
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

}  // namespace coplab
