#include "coplab/linalg.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace coplab {

std::size_t rank(RatMatrix rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

RatOperator RatOperator::scalar_op(Rational s) {
  RatOperator op;
  op.scalar_ = std::move(s);
  return op;
}

RatOperator RatOperator::unit(Point q, Point p) {
  RatOperator op;
  op.matrix_[{q, p}] = 1;
  return op;
}

Rational RatOperator::entry(Point q, Point p) const {
  Rational v = q == p ? scalar_ : Rational(0);
  auto it = matrix_.find({q, p});
  if (it != matrix_.end()) v += it->second;
  return v;
}

std::vector<Point> RatOperator::indices() const {
  std::set<Point> s;
  for (const auto& [ix, c] : matrix_) {
    s.insert(ix.first);
    s.insert(ix.second);
  }
  return {s.begin(), s.end()};
}

void RatOperator::add_entry(Point q, Point p, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = matrix_.try_emplace({q, p}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) matrix_.erase(it);
  }
}

RatOperator operator+(const RatOperator& a, const RatOperator& b) {
  RatOperator out = a;
  out.scalar_ += b.scalar_;
  for (const auto& [ix, c] : b.matrix_) out.add_entry(ix.first, ix.second, c);
  return out;
}

RatOperator operator-(const RatOperator& a, const RatOperator& b) {
  return a + Rational(-1) * b;
}

RatOperator operator*(const Rational& c, const RatOperator& a) {
  RatOperator out;
  if (c == 0) return out;
  out.scalar_ = c * a.scalar_;
  for (const auto& [ix, v] : a.matrix_) out.matrix_[ix] = c * v;
  return out;
}

RatOperator operator*(const RatOperator& a, const RatOperator& b) {
  // (s + M)(t + N) = st + sN + tM + MN
  RatOperator out;
  out.scalar_ = a.scalar_ * b.scalar_;
  for (const auto& [ix, v] : b.matrix_) {
    out.add_entry(ix.first, ix.second, a.scalar_ * v);
  }
  for (const auto& [ix, v] : a.matrix_) {
    out.add_entry(ix.first, ix.second, b.scalar_ * v);
  }
  for (const auto& [ia, va] : a.matrix_) {
    auto lo = b.matrix_.lower_bound({ia.second, 0});
    for (auto it = lo; it != b.matrix_.end() && it->first.first == ia.second;
         ++it) {
      out.add_entry(ia.first, it->first.second, va * it->second);
    }
  }
  return out;
}

bool in_En0(const RatOperator& op, Point r) {
  return op.scalar() == 0 && op.matrix().count({r, r}) == 0;
}

std::string to_string(const RatOperator& op) {
  std::ostringstream os;
  bool first = true;
  if (op.scalar() != 0) {
    os << op.scalar() << "*1";
    first = false;
  }
  for (const auto& [ix, c] : op.matrix()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << "E(" << ix.first << "," << ix.second << ")";
  }
  if (first) os << "0";
  return os.str();
}

namespace {

RatMatrix dense(const RatOperator& op, const std::vector<Point>& window) {
  RatMatrix m(window.size(), std::vector<Rational>(window.size()));
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = 0; j < window.size(); ++j) {
      m[i][j] = op.entry(window[i], window[j]);
    }
  }
  return m;
}

}  // namespace

std::optional<std::size_t> finite_rank(const RatOperator& op) {
  if (op.scalar() != 0) return std::nullopt;
  return rank(dense(op, op.indices()));
}

bool orthogonal_idempotent_check(const std::vector<RatOperator>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].is_zero() || !(ops[i] * ops[i] == ops[i])) return false;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (i != j && !(ops[i] * ops[j]).is_zero()) return false;
    }
  }
  std::set<Point> window;
  std::size_t total = 0;
  for (const auto& op : ops) {
    auto r = finite_rank(op);
    if (!r) return true;  // an infinite-rank summand: no finite window bound
    total += *r;
    for (Point p : op.indices()) window.insert(p);
  }
  if (total > window.size()) {
    throw std::logic_error("orthogonal idempotents exceed window dimension");
  }
  return true;
}

RatMatrix vandermonde_embed(const std::vector<Rational>& as, std::size_t m) {
  if (m < as.size()) throw std::invalid_argument("vandermonde: m < |as|");
  std::set<Rational> seen;
  RatMatrix rows;
  for (const auto& a : as) {
    if (!seen.insert(a).second) {
      throw std::invalid_argument("vandermonde: duplicate " + to_string(a));
    }
    std::vector<Rational> row(m);
    Rational pw = 1;
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = pw;
      pw *= a;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace coplab
