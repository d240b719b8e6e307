#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coplab/linalg.hpp"

namespace coplab {

// Basis letter of En_0 (r = 0): E(q,p) for (q,p) != (0,0), and for (0,0) the
// operator E(0,0) - 1, which is the En_0 component of E(0,0).
struct UnitLetter {
  std::size_t tag = 0;
  Point q = 0;
  Point p = 0;

  bool is_shifted() const { return q == kR && p == kR; }

  friend bool operator==(const UnitLetter&, const UnitLetter&) = default;
  friend auto operator<=>(const UnitLetter&, const UnitLetter&) = default;
};

RatOperator unit_operator(Point q, Point p);

// Alternating word in written order.
using TensorWord = std::vector<UnitLetter>;

// Element of the coproduct En u En in the tensor-word basis.
class TensorElem {
 public:
  TensorElem() = default;
  static TensorElem scalar(Rational c);
  // Splits op into its scalar and En_0 parts.
  static TensorElem letter(std::size_t tag, const RatOperator& op);
  static TensorElem word(const TensorWord& w, Rational c = 1);

  const Rational& scalar_part() const { return scalar_; }
  const std::map<TensorWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return scalar_ == 0 && terms_.empty(); }
  std::size_t max_length() const;
  std::size_t term_count() const { return terms_.size() + (scalar_ != 0); }

  friend TensorElem operator+(const TensorElem& a, const TensorElem& b);
  friend TensorElem operator-(const TensorElem& a, const TensorElem& b);
  friend TensorElem operator*(const Rational& c, const TensorElem& a);
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
  friend bool operator==(const TensorElem&, const TensorElem&) = default;

  void add_term(const TensorWord& w, const Rational& c);

 private:
  Rational scalar_ = 0;
  std::map<TensorWord, Rational> terms_;
};

struct RawFactor {
  std::size_t tag = 0;
  RatOperator op;
};

struct RawProduct {
  Rational coef = 1;
  std::vector<RawFactor> factors;  // written order
};

TensorElem tensor_normalize(const std::vector<RawProduct>& raw);

// e.g. "2*A:E(1,0)|B:E(2,1) - B:U(0,0) + 3"; U(0,0) is E(0,0) - 1.
std::string to_string(const TensorElem& x);
std::vector<RawProduct> parse_tensor_raw(std::string_view text);
TensorElem parse_tensor(std::string_view text);

}  // namespace coplab
