#include "coplab/functorial.hpp"

#include <algorithm>

namespace coplab {

bool separates(const FinSubset& s, const std::vector<FinSubset>& rs) {
  std::set<FinSubset> traces;
  for (const auto& r : rs) {
    if (!traces.insert(restrict_cs(r, s)).second) return false;
  }
  return true;
}

FinSubset find_separator(const std::vector<FinSubset>& rs) {
  std::set<FinSubset> distinct(rs.begin(), rs.end());
  if (distinct.size() != rs.size()) {
    throw std::invalid_argument("find_separator: inputs not distinct");
  }
  FinSubset all;
  for (const auto& r : rs) all.insert(r.begin(), r.end());
  std::vector<Point> u(all.begin(), all.end());
  // Subsets of the union by size, each size in lexicographic order.
  for (std::size_t k = 0; k <= u.size(); ++k) {
    std::vector<bool> pick(u.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k),
              true);
    do {
      FinSubset s;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (pick[i]) s.insert(u[i]);
      }
      if (separates(s, rs)) return s;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw std::logic_error("find_separator: union failed to separate");
}

FinSubset restrict_cs(const FinSubset& r, const FinSubset& s) {
  FinSubset out;
  std::set_intersection(r.begin(), r.end(), s.begin(), s.end(),
                        std::inserter(out, out.end()));
  return out;
}

std::vector<FinSubset> all_subsets(Point n) {
  std::vector<FinSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    FinSubset s;
    for (Point p = 0; p < n; ++p) {
      if (mask >> p & 1) s.insert(p);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<GenLabel> build_Xr(const FinSubset& r, Point n) {
  std::vector<GenLabel> out;
  for (auto& s : all_subsets(n)) {
    FinSubset trace = restrict_cs(r, s);
    out.push_back({std::move(s), std::move(trace)});
  }
  return out;
}

FreeTupleWitness verify_free_tuple(const std::vector<FinSubset>& rs,
                                   const FreeWord& v, const FreeWord& w) {
  if (v == w) throw std::invalid_argument("verify_free_tuple: v == w");
  FreeTupleWitness out;
  out.s = find_separator(rs);
  auto project = [&](const FreeWord& word) {
    std::vector<GenLabel> img;
    for (std::size_t i : word) {
      if (i >= rs.size()) throw std::invalid_argument("letter out of range");
      img.push_back({out.s, restrict_cs(rs[i], out.s)});
    }
    return img;
  };
  out.projected_v = project(v);
  out.projected_w = project(w);
  if (out.projected_v == out.projected_w) {
    throw std::logic_error("verify_free_tuple: projections coincide");
  }
  return out;
}

std::uint64_t es_code(const FinSubset& s, const FinSubset& sub) {
  std::uint64_t code = 0;
  std::size_t bit = 0;
  std::size_t found = 0;
  for (Point p : s) {
    if (sub.count(p)) {
      code |= std::uint64_t{1} << bit;
      ++found;
    }
    ++bit;
  }
  if (found != sub.size()) throw std::invalid_argument("es_code: not inside s");
  return code;
}

std::vector<FinSubset> enumerate_es(const FinSubset& s) {
  std::vector<Point> elems(s.begin(), s.end());
  std::vector<FinSubset> out(std::size_t{1} << elems.size());
  for (std::uint64_t code = 0; code < out.size(); ++code) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (code >> i & 1) out[code].insert(elems[i]);
    }
  }
  return out;
}

std::uint64_t diagonal_fn(std::uint64_t n, std::uint64_t r) {
  if (n == 0) throw std::invalid_argument("diagonal_fn: n = 0");
  return std::min(r, n - 1);
}

std::vector<Rational> rational_cuts(const std::vector<Rational>& reals) {
  for (std::size_t i = 1; i < reals.size(); ++i) {
    if (!(reals[i - 1] < reals[i])) {
      throw std::invalid_argument("rational_cuts: not strictly increasing");
    }
  }
  if (reals.empty()) throw std::invalid_argument("rational_cuts: empty");
  return {reals.begin() + 1, reals.end()};
}

std::size_t cut_map_as(const std::vector<Rational>& cuts, const Rational& r) {
  std::size_t i = 0;
  while (i < cuts.size() && cuts[i] <= r) ++i;
  return i;
}

Rational section_b(const std::vector<Rational>& reals, std::size_t i) {
  if (reals.empty()) throw std::invalid_argument("section_b: empty");
  return reals[std::min(i, reals.size() - 1)];
}

MinMonoidElem min_monoid_op(const MinMonoidElem& x, const MinMonoidElem& y) {
  if (!x.index) return y;
  if (!y.index) return x;
  return MinMonoidElem::gen(std::min(*x.index, *y.index));
}

MinMonoidElem min_monoid_eval(const std::vector<std::uint64_t>& gens) {
  MinMonoidElem x;
  for (auto g : gens) x = min_monoid_op(x, MinMonoidElem::gen(g));
  return x;
}

bool is_isotone(const std::vector<std::uint64_t>& a) {
  return std::is_sorted(a.begin(), a.end());
}

MinMonoidElem min_monoid_functor(const std::vector<std::uint64_t>& a,
                                 const MinMonoidElem& x) {
  if (!is_isotone(a)) throw std::invalid_argument("min_monoid_functor");
  if (!x.index) return x;
  if (*x.index >= a.size()) {
    throw std::invalid_argument("min_monoid_functor: index outside domain");
  }
  return MinMonoidElem::gen(a[*x.index]);
}

std::optional<std::uint64_t> diagonal_separator_free(const FreeWord& u,
                                                     const FreeWord& v,
                                                     std::uint64_t nmax) {
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    FreeWord fu, fv;
    for (auto i : u) fu.push_back(diagonal_fn(n, i));
    for (auto i : v) fv.push_back(diagonal_fn(n, i));
    if (fu != fv) return n;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> diagonal_separator_min(
    const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v,
    std::uint64_t nmax) {
  MinMonoidElem x = min_monoid_eval(u), y = min_monoid_eval(v);
  for (std::uint64_t n = 1; n <= nmax; ++n) {
    auto fn = [n](const MinMonoidElem& e) {
      return e.index ? MinMonoidElem::gen(diagonal_fn(n, *e.index)) : e;
    };
    if (fn(x) != fn(y)) return n;
  }
  return std::nullopt;
}

Partition eq_product_embed(const std::vector<Partition>& alphas) {
  if (alphas.empty()) throw std::invalid_argument("eq_product_embed: d = 0");
  std::uint32_t n = alphas[0].n();
  for (const auto& a : alphas) {
    if (a.n() != n) throw std::invalid_argument("eq_product_embed: sizes");
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i) total *= n;
  std::vector<std::uint32_t> labels(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    // Label = tuple of block ids, coded in the same radix.
    std::uint64_t rest = x, label = 0, weight = 1;
    for (std::size_t i = alphas.size(); i-- > 0;) {
      label += alphas[i].block(static_cast<std::uint32_t>(rest % n)) * weight;
      rest /= n;
      weight *= n;
    }
    labels[x] = static_cast<std::uint32_t>(label);
  }
  return Partition(labels);
}

}  // namespace coplab
