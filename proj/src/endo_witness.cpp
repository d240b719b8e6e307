#include "coplab/endo_witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "coplab/sym_witness.hpp"

namespace coplab {

void add_to(LevelVec& v, const LevelPoint& x, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(x, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) v.erase(it);
}

std::string to_string(const LevelVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : v) {
    std::string coef = to_string(c);
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        coef = to_string(Rational(-c));
      } else {
        out += " + ";
      }
    }
    if (coef == "1") {
      coef.clear();
    } else if (coef == "-1") {
      coef = "-";
    } else {
      coef += "*";
    }
    out += coef + to_string(x);
  }
  return out;
}

void LevelMap::set_image(const LevelPoint& x, LevelVec image) {
  if (image.size() == 1 && image.begin()->first == x &&
      image.begin()->second == 1) {
    images_.erase(x);
    return;
  }
  images_[x] = std::move(image);
}

LevelVec LevelMap::apply(const LevelPoint& x) const {
  auto it = images_.find(x);
  if (it == images_.end()) return {{x, Rational(1)}};
  return it->second;
}

LevelVec LevelMap::apply(const LevelVec& v) const {
  LevelVec out;
  for (const auto& [x, c] : v) {
    auto it = images_.find(x);
    if (it == images_.end()) {
      add_to(out, x, c);
      continue;
    }
    for (const auto& [y, d] : it->second) add_to(out, y, c * d);
  }
  return out;
}

bool LevelMap::is_involution() const {
  for (const auto& [x, image] : images_) {
    LevelVec back = apply(image);
    if (back.size() != 1 || back.begin()->first != x ||
        back.begin()->second != 1) {
      return false;
    }
  }
  return true;
}

LevelVec apply_letter(const UnitLetter& u, const LevelVec& v) {
  LevelVec out;
  for (const auto& [x, c] : v) {
    if (u.is_shifted()) {
      // E(0,0) - 1 kills (0,k) and negates every other basis point.
      if (x.p != kR) add_to(out, x, -c);
    } else if (x.p == u.p) {
      add_to(out, {u.q, x.k}, c);
    }
  }
  return out;
}

namespace {

std::set<UnitLetter> letter_set(const TensorElem& x) {
  std::set<UnitLetter> out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& l : w) out.insert({0, l.q, l.p});
  }
  return out;
}

std::size_t span_rank(const std::vector<std::map<RatOperator::Index, Rational>>&
                          vecs,
                      const std::vector<Rational>& scalars) {
  std::set<RatOperator::Index> keys;
  for (const auto& v : vecs) {
    for (const auto& [k, c] : v) keys.insert(k);
  }
  RatMatrix rows;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    std::vector<Rational> row;
    row.push_back(scalars.empty() ? Rational(0) : scalars[i]);
    for (const auto& k : keys) {
      auto it = vecs[i].find(k);
      row.push_back(it == vecs[i].end() ? Rational(0) : it->second);
    }
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

}  // namespace

std::pair<std::size_t, std::size_t> compression_ranks(
    const TensorElem& x, const std::set<Point>& sigma) {
  std::vector<std::map<RatOperator::Index, Rational>> before, after;
  std::vector<Rational> scalars;
  for (const auto& l : letter_set(x)) {
    RatOperator op = unit_operator(l.q, l.p);
    before.push_back(op.matrix());
    scalars.push_back(op.scalar());
    std::map<RatOperator::Index, Rational> compressed;
    for (Point q : sigma) {
      for (Point p : sigma) {
        Rational e = op.entry(q, p);
        if (e != 0) compressed[{q, p}] = e;
      }
    }
    after.push_back(std::move(compressed));
  }
  return {span_rank(before, scalars), span_rank(after, {})};
}

std::set<Point> sigma_select(const TensorElem& x) {
  std::set<Point> sigma{kR};
  for (const auto& l : letter_set(x)) {
    sigma.insert(l.q);
    sigma.insert(l.p);
  }
  while (true) {
    auto [before, after] = compression_ranks(x, sigma);
    if (before == after) return sigma;
    Point next = 0;
    while (sigma.count(next)) ++next;
    sigma.insert(next);
  }
}

std::map<BWord, Rational> rebase(const TensorElem& x,
                                 const std::set<Point>& sigma) {
  std::map<BWord, Rational> out;
  for (const auto& [w, c] : x.terms()) {
    std::vector<std::pair<BWord, Rational>> partial{{BWord{}, c}};
    for (const auto& l : w) {
      std::vector<std::pair<BLetter, Rational>> expansion;
      if (l.is_shifted()) {
        for (Point p : sigma) {
          if (p != kR) expansion.push_back({{l.tag, p, p, false}, Rational(-1)});
        }
        expansion.push_back({{l.tag, 0, 0, true}, Rational(-1)});
      } else {
        expansion.push_back({{l.tag, l.q, l.p, false}, Rational(1)});
      }
      std::vector<std::pair<BWord, Rational>> next;
      for (const auto& [bw, bc] : partial) {
        for (const auto& [bl, ec] : expansion) {
          BWord longer = bw;
          longer.push_back(bl);
          next.push_back({std::move(longer), bc * ec});
        }
      }
      partial = std::move(next);
    }
    for (auto& [bw, bc] : partial) {
      auto [it, fresh] = out.emplace(bw, bc);
      if (!fresh) {
        it->second += bc;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

SelectedWord select_word(const TensorElem& x, const std::set<Point>& sigma) {
  if (x.terms().empty()) {
    throw std::invalid_argument("select_word: x is zero or scalar");
  }
  std::size_t n = x.max_length();
  std::vector<std::pair<const BWord*, Rational>> candidates;
  auto rb = rebase(x, sigma);
  for (const auto& [bw, c] : rb) {
    if (bw.size() != n) continue;
    bool plain = std::none_of(bw.begin(), bw.end(),
                              [](const BLetter& l) { return l.annihilator; });
    if (plain) candidates.push_back({&bw, c});
  }
  if (candidates.empty()) {
    throw std::logic_error("select_word: no top-length word over E(q,p)");
  }
  auto key = [](const BLetter& l) {
    return std::make_tuple(l.q == l.p, l.q, l.p, l.tag);
  };
  for (std::size_t k = 1; k <= n; ++k) {
    const BLetter* best = nullptr;
    for (const auto& [bw, c] : candidates) {
      const BLetter& l = (*bw)[n - k];
      if (!best || key(l) < key(*best)) best = &l;
    }
    BLetter chosen = *best;
    std::erase_if(candidates, [&](const auto& cand) {
      return (*cand.first)[n - k] != chosen;
    });
  }
  SelectedWord out;
  for (const auto& l : *candidates.front().first) {
    out.letters.push_back({l.tag, l.q, l.p});
  }
  out.coefficient = candidates.front().second;
  return out;
}

LevelMap build_t_endo(const TensorWord& word) {
  std::uint32_t n = static_cast<std::uint32_t>(word.size());
  if (n == 0) throw std::invalid_argument("build_t_endo: empty word");
  auto letter = [&](std::uint32_t k) -> const UnitLetter& {
    return word[n - k];
  };
  // Work in the basis where, on a level k with q_k = p_k, the vector
  // (p_k,k) + (0,k) takes the place of (0,k); a basis point keeps its name.
  auto replaced = [&](std::uint32_t k) {
    return k >= 1 && k <= n && letter(k).q == letter(k).p;
  };
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (letter(k).is_shifted()) {
      throw std::invalid_argument("build_t_endo: E(0,0) letter");
    }
  }
  auto prime = [&](std::uint32_t k) -> LevelPoint {
    return replaced(k) ? LevelPoint{kR, k} : LevelPoint{letter(k).p, k};
  };
  std::map<LevelPoint, LevelPoint> swap;
  auto add = [&](LevelPoint a, LevelPoint b) {
    if (a == b || !swap.emplace(a, b).second || !swap.emplace(b, a).second) {
      throw std::logic_error("build_t_endo: inconsistent pairs");
    }
  };
  add({letter(1).p, 0}, prime(1));
  for (std::uint32_t k = 1; k < n; ++k) add({letter(k).q, k}, prime(k + 1));
  add({letter(n).q, n}, {letter(n).q, n + 1});

  auto vec = [&](const LevelPoint& name) {
    LevelVec v{{name, Rational(1)}};
    if (name.p == kR && replaced(name.k)) add_to(v, {letter(name.k).p, name.k}, 1);
    return v;
  };
  auto t_of_name = [&](const LevelPoint& name) {
    auto it = swap.find(name);
    return vec(it == swap.end() ? name : it->second);
  };
  std::set<LevelPoint> touched;
  for (const auto& [a, b] : swap) touched.insert(a);
  for (std::uint32_t k = 1; k <= n; ++k) {
    if (replaced(k)) touched.insert({letter(k).p, k});
  }
  LevelMap t;
  for (const auto& x : touched) {
    LevelVec image;
    if (x.p == kR && replaced(x.k)) {
      // (0,k) = name(0,k) - (p_k,k).
      for (const auto& [y, c] : t_of_name(x)) add_to(image, y, c);
      for (const auto& [y, c] : t_of_name({letter(x.k).p, x.k})) {
        add_to(image, y, -c);
      }
    } else {
      image = t_of_name(x);
    }
    t.set_image(x, std::move(image));
  }
  if (!t.is_involution()) throw std::logic_error("build_t_endo: t^2 != 1");
  return t;
}

namespace {

LevelVec apply_word(const TensorWord& w, const LevelMap& t, LevelVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->tag == kAlpha) {
      v = apply_letter(*it, v);
    } else {
      v = t.apply(apply_letter(*it, t.apply(v)));
    }
    if (v.empty()) break;
  }
  return v;
}

}  // namespace

LevelVec evaluate_hx(const TensorElem& x, const LevelMap& t,
                     const TensorWord& word) {
  if (word.empty()) throw std::invalid_argument("evaluate_hx: empty word");
  LevelVec v{{LevelPoint{word.back().p, 0}, Rational(1)}};
  if (word.back().tag == kAlpha) v = t.apply(v);
  LevelVec out;
  for (const auto& [y, c] : v) add_to(out, y, x.scalar_part() * c);
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [y, d] : apply_word(w, t, v)) add_to(out, y, c * d);
  }
  if (word.front().tag == kAlpha) out = t.apply(out);
  return out;
}

EndoWitness endo_witness(const TensorElem& x) {
  if (x.is_zero()) throw std::invalid_argument("endo_witness: x = 0");
  EndoWitness w;
  if (x.terms().empty()) {
    w.sigma = {kR};
    w.t.set_image({kR, 0}, {{LevelPoint{kR, 1}, Rational(1)}});
    w.t.set_image({kR, 1}, {{LevelPoint{kR, 0}, Rational(1)}});
    w.start = {kR, 0};
    w.result = {{LevelPoint{kR, 1}, x.scalar_part()}};
    w.target = {kR, 1};
    w.target_coefficient = x.scalar_part();
    return w;
  }
  w.sigma = sigma_select(x);
  w.word = select_word(x, w.sigma);
  w.t = build_t_endo(w.word.letters);
  w.start = {w.word.letters.back().p, 0};
  w.result = evaluate_hx(x, w.t, w.word.letters);
  w.target = {w.word.letters.front().q,
              static_cast<std::uint32_t>(w.word.n() + 1)};
  auto it = w.result.find(w.target);
  w.target_coefficient = it == w.result.end() ? Rational(0) : it->second;
  return w;
}

}  // namespace coplab
