#include "coplab/ground.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coplab {

// ---------------------------------------------------------------------------
// FinSuppEndo

FinSuppEndo FinSuppEndo::from_pairs(std::vector<Entry> pairs) {
  std::sort(pairs.begin(), pairs.end());
  FinSuppEndo f;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first) {
      throw std::invalid_argument("FinSuppEndo: repeated key " +
                                  std::to_string(pairs[i].first));
    }
    if (pairs[i].first != pairs[i].second) f.table_.push_back(pairs[i]);
  }
  return f;
}

FinSuppEndo FinSuppEndo::transposition(Point a, Point b) {
  if (a == b) return {};
  return from_pairs({{a, b}, {b, a}});
}

FinSuppEndo FinSuppEndo::from_cycles(
    const std::vector<std::vector<Point>>& cycles) {
  std::vector<Entry> pairs;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      pairs.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
  }
  return from_pairs(std::move(pairs));
}

FinSuppEndo FinSuppEndo::from_images(const std::vector<Point>& images) {
  std::vector<Entry> pairs;
  for (Point p = 0; p < images.size(); ++p) pairs.emplace_back(p, images[p]);
  return from_pairs(std::move(pairs));
}

std::vector<Point> FinSuppEndo::support() const {
  std::vector<Point> out;
  out.reserve(table_.size());
  for (const auto& e : table_) out.push_back(e.first);
  return out;
}

Point eval(const FinSuppEndo& f, Point p) { return f(p); }

FinSuppEndo compose(const FinSuppEndo& f, const FinSuppEndo& g) {
  std::set<Point> keys;
  for (const auto& e : f.exceptions()) keys.insert(e.first);
  for (const auto& e : g.exceptions()) keys.insert(e.first);
  std::vector<FinSuppEndo::Entry> pairs;
  for (Point p : keys) pairs.emplace_back(p, f(g(p)));
  return FinSuppEndo::from_pairs(std::move(pairs));
}

bool is_permutation(const FinSuppEndo& f) {
  std::vector<Point> keys = f.support();
  std::vector<Point> images;
  for (const auto& e : f.exceptions()) images.push_back(e.second);
  std::sort(images.begin(), images.end());
  return keys == images;
}

FinSuppEndo inverse(const FinSuppEndo& f) {
  if (!is_permutation(f)) {
    throw std::invalid_argument("inverse: not a permutation: " + to_string(f));
  }
  std::vector<FinSuppEndo::Entry> pairs;
  for (const auto& [k, v] : f.exceptions()) pairs.emplace_back(v, k);
  return FinSuppEndo::from_pairs(std::move(pairs));
}

FinSuppEndo block_product_embed(const std::vector<std::vector<Point>>& blocks,
                                const std::vector<FinSuppEndo>& maps) {
  if (blocks.size() != maps.size()) {
    throw std::invalid_argument("block_product_embed: arity mismatch");
  }
  std::set<Point> seen;
  for (const auto& b : blocks) {
    for (Point p : b) {
      if (!seen.insert(p).second) {
        throw std::invalid_argument("block_product_embed: blocks overlap");
      }
    }
  }
  std::vector<FinSuppEndo::Entry> pairs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::set<Point> block(blocks[i].begin(), blocks[i].end());
    for (const auto& [k, v] : maps[i].exceptions()) {
      if (!block.count(k) || !block.count(v)) {
        throw std::invalid_argument("block_product_embed: map " +
                                    std::to_string(i) + " leaves its block");
      }
      pairs.emplace_back(k, v);
    }
  }
  return FinSuppEndo::from_pairs(std::move(pairs));
}

std::string to_string(const FinSuppEndo& f) {
  std::ostringstream os;
  if (is_permutation(f)) {
    if (f.is_identity()) return "()";
    std::set<Point> done;
    for (const auto& e : f.exceptions()) {
      if (done.count(e.first)) continue;
      os << '(';
      Point p = e.first;
      bool first = true;
      do {
        if (!first) os << ' ';
        first = false;
        os << p;
        done.insert(p);
        p = f(p);
      } while (p != e.first);
      os << ')';
    }
    return os.str();
  }
  os << '{';
  bool first = true;
  for (const auto& [k, v] : f.exceptions()) {
    if (!first) os << ',';
    first = false;
    os << k << ':' << v;
  }
  os << '}';
  return os.str();
}

namespace {

std::vector<Point> parse_naturals(std::string_view body, char sep) {
  std::vector<Point> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(static_cast<Point>(std::stoul(cur)));
      cur.clear();
    }
  };
  for (char c : body) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == sep || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw std::invalid_argument("unexpected character '" +
                                  std::string(1, c) + "'");
    }
  }
  flush();
  return out;
}

}  // namespace

FinSuppEndo parse_endo(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i == text.size()) return {};
  if (text[i] == '{') {
    std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("parse_endo: missing '}'");
    }
    std::vector<FinSuppEndo::Entry> pairs;
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string_view item = body.substr(
          start, comma == std::string_view::npos ? body.npos : comma - start);
      auto nums = parse_naturals(item, ':');
      if (nums.size() == 2) {
        pairs.emplace_back(nums[0], nums[1]);
      } else if (!nums.empty()) {
        throw std::invalid_argument("parse_endo: bad entry");
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return FinSuppEndo::from_pairs(std::move(pairs));
  }
  std::vector<std::vector<Point>> cycles;
  while (i < text.size()) {
    skip();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("parse_endo: expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("parse_endo: missing ')'");
    }
    auto cyc = parse_naturals(text.substr(i + 1, close - i - 1), ',');
    std::set<Point> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size()) {
      throw std::invalid_argument("parse_endo: repeated point in cycle");
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  // Cycles compose right to left, like the maps themselves.
  FinSuppEndo f;
  for (const auto& c : cycles) f = compose(f, FinSuppEndo::from_cycles({c}));
  return f;
}

// ---------------------------------------------------------------------------
// Levels

std::string to_string(const LevelPoint& x) {
  return "(" + std::to_string(x.p) + "," + std::to_string(x.k) + ")";
}

LevelInvolution LevelInvolution::from_pairs(std::vector<Pair> pairs) {
  LevelInvolution t;
  t.assign(pairs);
  return t;
}

void LevelInvolution::assign(const std::vector<Pair>& pairs) {
  pairs_.clear();
  for (const auto& [a, b] : pairs) add_pair(a, b);
}

void LevelInvolution::add_pair(const LevelPoint& a, const LevelPoint& b) {
  if (a == b) {
    throw std::invalid_argument("LevelInvolution: degenerate pair at " +
                                to_string(a));
  }
  for (const auto& [c, d] : pairs_) {
    if (a == c || a == d || b == c || b == d) {
      throw std::invalid_argument("LevelInvolution: pairs overlap");
    }
  }
  pairs_.emplace_back(a, b);
}

LevelPoint LevelInvolution::operator()(const LevelPoint& x) const {
  for (const auto& [a, b] : pairs_) {
    if (a == x) return b;
    if (b == x) return a;
  }
  return x;
}

LevelPoint apply_involution(const LevelInvolution& t, const LevelPoint& x) {
  return t(x);
}

}  // namespace coplab
