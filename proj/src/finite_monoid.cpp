#include "coplab/finite_monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coplab {

bool is_associative(std::size_t size, const std::vector<Elem>& table) {
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      Elem ab = table[a * size + b];
      for (std::size_t c = 0; c < size; ++c) {
        if (table[ab * size + c] != table[a * size + table[b * size + c]]) {
          return false;
        }
      }
    }
  }
  return true;
}

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<Elem> table,
                           Elem identity, std::vector<std::string> names)
    : size_(size),
      table_(std::move(table)),
      identity_(identity),
      names_(std::move(names)) {
  if (size_ == 0 || table_.size() != size_ * size_ || identity_ >= size_) {
    throw std::invalid_argument("FiniteMonoid: malformed table");
  }
  for (Elem x : table_) {
    if (x >= size_) throw std::invalid_argument("FiniteMonoid: entry range");
  }
  for (Elem a = 0; a < size_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw std::invalid_argument("FiniteMonoid: identity fails");
    }
  }
  if (!is_associative(size_, table_)) {
    throw std::invalid_argument("FiniteMonoid: not associative");
  }
  if (names_.empty()) {
    for (Elem a = 0; a < size_; ++a) names_.push_back(std::to_string(a));
  }
  if (names_.size() != size_) {
    throw std::invalid_argument("FiniteMonoid: name count");
  }
}

FiniteMonoid FiniteMonoid::transformation_monoid(
    Point degree, const std::vector<std::vector<Point>>& generators) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Point>> elems{id};
  std::map<std::vector<Point>, Elem> index{{id, 0}};
  for (const auto& g : generators) {
    if (g.size() != degree) {
      throw std::invalid_argument("transformation_monoid: degree mismatch");
    }
    for (Point v : g) {
      if (v >= degree) throw std::invalid_argument("transformation_monoid");
    }
  }
  // Left multiplication by generators reaches everything: g o x.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<Point> y(degree);
      for (Point p = 0; p < degree; ++p) y[p] = g[elems[i][p]];
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) {
        elems.push_back(y);
      }
    }
  }
  // Canonical element order: identity first, then lexicographic maps.
  std::sort(elems.begin() + 1, elems.end());
  index.clear();
  for (Elem a = 0; a < elems.size(); ++a) index[elems[a]] = a;
  std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::vector<Point> ab(degree);
      for (Point p = 0; p < degree; ++p) ab[p] = elems[a][elems[b][p]];
      table[a * n + b] = index.at(ab);
    }
  }
  std::vector<std::string> names;
  for (const auto& m : elems) {
    names.push_back(to_string(FinSuppEndo::from_images(m)));
  }
  FiniteMonoid out(n, std::move(table), 0, std::move(names));
  out.degree_ = degree;
  out.maps_ = std::move(elems);
  return out;
}

FiniteMonoid FiniteMonoid::symmetric_group(Point n) {
  std::vector<std::vector<Point>> gens;
  if (n >= 2) {
    std::vector<Point> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (Point p = 0; p < n; ++p) cycle[p] = (p + 1) % n;
    gens = {swap, cycle};
  }
  return transformation_monoid(n, gens);
}

FiniteMonoid FiniteMonoid::cyclic_group(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n = 0");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return FiniteMonoid(n, std::move(table), 0);
}

FiniteMonoid FiniteMonoid::direct_product(const FiniteMonoid& a,
                                          const FiniteMonoid& b) {
  std::size_t n = a.size() * b.size();
  auto enc = [&](Elem x, Elem y) { return static_cast<Elem>(x * b.size() + y); };
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (Elem x = 0; x < n; ++x) {
    Elem x1 = x / b.size(), x2 = x % b.size();
    names[x] = "<" + a.name(x1) + "," + b.name(x2) + ">";
    for (Elem y = 0; y < n; ++y) {
      Elem y1 = y / b.size(), y2 = y % b.size();
      table[x * n + y] = enc(a.mul(x1, y1), b.mul(x2, y2));
    }
  }
  return FiniteMonoid(n, std::move(table), enc(a.identity(), b.identity()),
                      std::move(names));
}

std::optional<Elem> FiniteMonoid::inverse(Elem a) const {
  for (Elem b = 0; b < size_; ++b) {
    if (mul(a, b) == identity_ && mul(b, a) == identity_) return b;
  }
  return std::nullopt;
}

bool FiniteMonoid::is_group() const {
  for (Elem a = 0; a < size_; ++a) {
    if (!inverse(a)) return false;
  }
  return true;
}

bool FiniteMonoid::is_commutative() const {
  for (Elem a = 0; a < size_; ++a) {
    for (Elem b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Elem FiniteMonoid::parse(std::string_view text) const {
  for (Elem a = 0; a < size_; ++a) {
    if (names_[a] == text) return a;
  }
  if (has_maps()) {
    FinSuppEndo f = parse_endo(text);
    for (Elem a = 0; a < size_; ++a) {
      if (FinSuppEndo::from_images(maps_[a]) == f) return a;
    }
  }
  throw std::invalid_argument("unknown element '" + std::string(text) + "'");
}

}  // namespace coplab
