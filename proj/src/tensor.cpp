#include "coplab/tensor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "coplab/coproduct.hpp"

namespace coplab {

RatOperator unit_operator(Point q, Point p) {
  RatOperator op = RatOperator::unit(q, p);
  if (q == kR && p == kR) op = op - RatOperator::identity();
  return op;
}

namespace {

struct Split {
  Rational scalar;
  std::vector<std::pair<UnitLetter, Rational>> parts;
};

// op = (scalar + M(r,r)) * 1 + sum M(q,p) u(q,p)
Split split(std::size_t tag, const RatOperator& op) {
  Split s;
  s.scalar = op.entry(kR, kR);
  for (const auto& [ix, c] : op.matrix()) {
    s.parts.push_back({UnitLetter{tag, ix.first, ix.second}, c});
  }
  return s;
}

TensorWord concat(const TensorWord& a, const TensorWord& b) {
  TensorWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Product of two alternating words, merging same-tag letters at the seam.
void multiply_words(const TensorWord& a, const TensorWord& b,
                    const Rational& coef, TensorElem& out) {
  if (a.empty() || b.empty() || a.back().tag != b.front().tag) {
    if (a.empty() && b.empty()) {
      out = out + TensorElem::scalar(coef);
    } else {
      out.add_term(concat(a, b), coef);
    }
    return;
  }
  const UnitLetter& x = a.back();
  const UnitLetter& y = b.front();
  RatOperator prod = unit_operator(x.q, x.p) * unit_operator(y.q, y.p);
  Split s = split(x.tag, prod);
  TensorWord a1(a.begin(), a.end() - 1);
  TensorWord b1(b.begin() + 1, b.end());
  if (s.scalar != 0) multiply_words(a1, b1, coef * s.scalar, out);
  for (const auto& [u, c] : s.parts) {
    TensorWord w = a1;
    w.push_back(u);
    w.insert(w.end(), b1.begin(), b1.end());
    out.add_term(w, coef * c);
  }
}

}  // namespace

TensorElem TensorElem::scalar(Rational c) {
  TensorElem x;
  x.scalar_ = std::move(c);
  return x;
}

TensorElem TensorElem::letter(std::size_t tag, const RatOperator& op) {
  Split s = split(tag, op);
  TensorElem x = scalar(s.scalar);
  for (const auto& [u, c] : s.parts) x.add_term({u}, c);
  return x;
}

TensorElem TensorElem::word(const TensorWord& w, Rational c) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].tag == w[i - 1].tag) {
      throw std::invalid_argument("TensorElem::word: not alternating");
    }
  }
  TensorElem x;
  if (w.empty()) {
    x.scalar_ = std::move(c);
  } else {
    x.add_term(w, c);
  }
  return x;
}

void TensorElem::add_term(const TensorWord& w, const Rational& c) {
  if (c == 0) return;
  if (w.empty()) {
    scalar_ += c;
    return;
  }
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t TensorElem::max_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
  TensorElem out = a;
  out.scalar_ += b.scalar_;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

TensorElem operator*(const Rational& c, const TensorElem& a) {
  TensorElem out;
  if (c == 0) return out;
  out.scalar_ = c * a.scalar_;
  for (const auto& [w, v] : a.terms_) out.terms_[w] = c * v;
  return out;
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
  return a + Rational(-1) * b;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
  TensorElem out;
  auto each = [](const TensorElem& x, auto&& fn) {
    if (x.scalar_ != 0) fn(TensorWord{}, x.scalar_);
    for (const auto& [w, c] : x.terms_) fn(w, c);
  };
  each(a, [&](const TensorWord& wa, const Rational& ca) {
    each(b, [&](const TensorWord& wb, const Rational& cb) {
      multiply_words(wa, wb, ca * cb, out);
    });
  });
  return out;
}

TensorElem tensor_normalize(const std::vector<RawProduct>& raw) {
  TensorElem sum;
  for (const auto& prod : raw) {
    TensorElem x = TensorElem::scalar(prod.coef);
    for (const auto& f : prod.factors) x = x * TensorElem::letter(f.tag, f.op);
    sum = sum + x;
  }
  return sum;
}

std::string to_string(const TensorElem& x) {
  std::ostringstream os;
  bool first = true;
  auto coef = [&](const Rational& c, bool bare) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (bare) {
      os << a;
    } else if (a != 1) {
      os << a << "*";
    }
  };
  for (const auto& [w, c] : x.terms()) {
    coef(c, false);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << "|";
      os << tag_name(w[i].tag) << ":" << (w[i].is_shifted() ? "U" : "E") << "("
         << w[i].q << "," << w[i].p << ")";
    }
  }
  if (x.scalar_part() != 0) coef(x.scalar_part(), true);
  if (first) os << "0";
  return os.str();
}

namespace {

std::size_t parse_tag(std::string_view s) {
  std::size_t tag = 0;
  if (s.empty()) throw std::invalid_argument("empty factor name");
  for (char c : s) {
    if (c < 'A' || c > 'Z') throw std::invalid_argument("bad factor name");
    tag = tag * 26 + static_cast<std::size_t>(c - 'A' + 1);
  }
  return tag - 1;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

RatOperator parse_letter_op(const std::string& s) {
  if (s.size() < 6 || (s[0] != 'E' && s[0] != 'U') || s[1] != '(' ||
      s.back() != ')') {
    throw std::invalid_argument("bad tensor letter '" + s + "'");
  }
  std::string body = s.substr(2, s.size() - 3);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("bad tensor letter '" + s + "'");
  }
  Point q = static_cast<Point>(std::stoul(body.substr(0, comma)));
  Point p = static_cast<Point>(std::stoul(body.substr(comma + 1)));
  if (s[0] == 'U') {
    if (q != kR || p != kR) throw std::invalid_argument("U only at (0,0)");
    return unit_operator(q, p);
  }
  return RatOperator::unit(q, p);
}

}  // namespace

std::vector<RawProduct> parse_tensor_raw(std::string_view text) {
  std::string s = strip(text);
  std::vector<RawProduct> out;
  std::size_t i = 0;
  int depth = 0;
  while (i < s.size()) {
    Rational sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t start = i;
    for (; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && (s[i] == '+' || s[i] == '-') && i > start &&
          s[i - 1] != '*' && s[i - 1] != '/') {
        break;
      }
    }
    std::string term = s.substr(start, i - start);
    if (term.empty()) throw std::invalid_argument("empty tensor term");
    RawProduct prod;
    prod.coef = sign;
    std::size_t colon = term.find(':');
    std::size_t star = term.find('*');
    if (colon == std::string::npos) {
      prod.coef *= parse_rational(term);
      out.push_back(std::move(prod));
      continue;
    }
    if (star != std::string::npos && star < colon) {
      prod.coef *= parse_rational(term.substr(0, star));
      term = term.substr(star + 1);
    }
    std::size_t b = 0;
    while (b <= term.size()) {
      std::size_t bar = term.find('|', b);
      std::string item = term.substr(b, bar == std::string::npos
                                            ? std::string::npos
                                            : bar - b);
      std::size_t c = item.find(':');
      if (c == std::string::npos) throw std::invalid_argument("letter tag");
      prod.factors.push_back(
          {parse_tag(item.substr(0, c)), parse_letter_op(item.substr(c + 1))});
      if (bar == std::string::npos) break;
      b = bar + 1;
    }
    out.push_back(std::move(prod));
  }
  return out;
}

TensorElem parse_tensor(std::string_view text) {
  return tensor_normalize(parse_tensor_raw(text));
}

}  // namespace coplab
