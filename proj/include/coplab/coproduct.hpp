#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coplab/finite_monoid.hpp"
#include "coplab/ground.hpp"

namespace coplab {

template <class E>
struct Letter {
  std::size_t tag = 0;
  E elem{};

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Reduced word of a coproduct, letters in written order (leftmost first).
// Only Coproduct<E> builds nonempty values, so the invariants hold.
template <class E>
class CopWord {
 public:
  CopWord() = default;

  const std::vector<Letter<E>>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter<E>& operator[](std::size_t i) const { return letters_[i]; }
  // The k-th letter counted from the right, 1-based.
  const Letter<E>& from_right(std::size_t k) const {
    return letters_[letters_.size() - k];
  }

  friend bool operator==(const CopWord&, const CopWord&) = default;
  friend auto operator<=>(const CopWord&, const CopWord&) = default;

 private:
  template <class>
  friend class Coproduct;
  explicit CopWord(std::vector<Letter<E>> letters)
      : letters_(std::move(letters)) {}

  std::vector<Letter<E>> letters_;
};

template <class E>
struct Factor {
  std::string name;
  std::function<E(const E&, const E&)> multiply;
  E identity{};
  std::function<std::optional<E>(const E&)> inverse;  // may be empty
  std::function<std::string(const E&)> format;
  std::function<E(std::string_view)> parse;
};

template <class E>
class Coproduct {
 public:
  explicit Coproduct(std::vector<Factor<E>> factors)
      : factors_(std::move(factors)) {}

  const std::vector<Factor<E>>& factors() const { return factors_; }
  const Factor<E>& factor(std::size_t tag) const { return factors_.at(tag); }

  // Normal form: merge adjacent same-tag letters, drop identities, cascade.
  CopWord<E> reduce(const std::vector<Letter<E>>& raw) const {
    std::vector<Letter<E>> stack;
    stack.reserve(raw.size());
    for (const auto& x : raw) {
      const auto& f = factor(x.tag);
      if (!stack.empty() && stack.back().tag == x.tag) {
        E prod = f.multiply(stack.back().elem, x.elem);
        stack.pop_back();
        if (!(prod == f.identity)) stack.push_back({x.tag, std::move(prod)});
      } else if (!(x.elem == f.identity)) {
        stack.push_back(x);
      }
    }
    return CopWord<E>(std::move(stack));
  }

  CopWord<E> reduce(const CopWord<E>& w) const { return reduce(w.letters()); }

  CopWord<E> letter(std::size_t tag, E elem) const {
    return reduce(std::vector<Letter<E>>{{tag, std::move(elem)}});
  }

  CopWord<E> multiply(const CopWord<E>& u, const CopWord<E>& v) const {
    std::vector<Letter<E>> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return reduce(raw);
  }

  // Reversed inverted letters; nullopt if some letter has no inverse.
  std::optional<CopWord<E>> inverse(const CopWord<E>& u) const {
    std::vector<Letter<E>> raw;
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
      const auto& f = factor(it->tag);
      if (!f.inverse) return std::nullopt;
      auto inv = f.inverse(it->elem);
      if (!inv) return std::nullopt;
      raw.push_back({it->tag, std::move(*inv)});
    }
    return reduce(raw);
  }

  bool is_reduced(const std::vector<Letter<E>>& raw) const {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i].elem == factor(raw[i].tag).identity) return false;
      if (i > 0 && raw[i].tag == raw[i - 1].tag) return false;
    }
    return true;
  }

  // "A:<elem>|B:<elem>"; the empty string is the identity.
  std::string format(const CopWord<E>& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += '|';
      const auto& f = factor(w[i].tag);
      out += f.name + ":" + f.format(w[i].elem);
    }
    return out;
  }

  std::vector<Letter<E>> parse_raw(std::string_view text) const {
    std::vector<Letter<E>> raw;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t bar = text.find('|', start);
      std::string_view item = text.substr(
          start, bar == std::string_view::npos ? text.npos : bar - start);
      std::size_t b = item.find_first_not_of(" \t");
      if (b != std::string_view::npos) {
        item = item.substr(b);
        std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
          throw std::invalid_argument("word letter without ':'");
        }
        std::string_view tag_name = item.substr(0, colon);
        while (!tag_name.empty() && tag_name.back() == ' ') {
          tag_name.remove_suffix(1);
        }
        std::size_t tag = factors_.size();
        for (std::size_t t = 0; t < factors_.size(); ++t) {
          if (factors_[t].name == tag_name) tag = t;
        }
        if (tag == factors_.size()) {
          throw std::invalid_argument("unknown factor '" +
                                      std::string(tag_name) + "'");
        }
        raw.push_back({tag, factors_[tag].parse(item.substr(colon + 1))});
      }
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return raw;
  }

  CopWord<E> parse(std::string_view text) const {
    return reduce(parse_raw(text));
  }

 private:
  std::vector<Factor<E>> factors_;
};

using EndoWord = CopWord<FinSuppEndo>;
using TableWord = CopWord<Elem>;

std::string tag_name(std::size_t tag);

// Copies of Se(Omega) with finitely supported letters, named A, B, ...
Coproduct<FinSuppEndo> endo_coproduct(std::size_t copies = 2);
// One factor per table, named A, B, ...
Coproduct<Elem> table_coproduct(const std::vector<FiniteMonoid>& monoids);

}  // namespace coplab
