#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coplab/ground.hpp"
#include "coplab/linalg.hpp"
#include "coplab/tensor.hpp"

namespace coplab {

// Vector of the direct sum of countably many copies of V, basis Omega x omega.
using LevelVec = std::map<LevelPoint, Rational>;

void add_to(LevelVec& v, const LevelPoint& x, const Rational& c);
std::string to_string(const LevelVec& v);

// Linear map fixing every basis point it does not list.
class LevelMap {
 public:
  void set_image(const LevelPoint& x, LevelVec image);
  const std::map<LevelPoint, LevelVec>& images() const { return images_; }
  LevelVec apply(const LevelPoint& x) const;
  LevelVec apply(const LevelVec& v) const;
  // t(t(x)) = x for every listed x (unlisted points are fixed already).
  bool is_involution() const;

 private:
  std::map<LevelPoint, LevelVec> images_;
};

// Natural action of one canonical letter on a vector, level by level.
LevelVec apply_letter(const UnitLetter& u, const LevelVec& v);

// Starts from {0} and the letter indices, adds the next unused natural until
// compression by P_Sigma keeps the rank of the span of the occurring letters.
std::set<Point> sigma_select(const TensorElem& x);
// Ranks of the letter span before and after compression.
std::pair<std::size_t, std::size_t> compression_ranks(
    const TensorElem& x, const std::set<Point>& sigma);

// Letter of the basis used for word selection: E(q,p), or the projection Z
// onto the complement of Sigma.
struct BLetter {
  std::size_t tag = 0;
  Point q = 0;
  Point p = 0;
  bool annihilator = false;

  friend bool operator==(const BLetter&, const BLetter&) = default;
  friend auto operator<=>(const BLetter&, const BLetter&) = default;
};
using BWord = std::vector<BLetter>;

// x with every U(0,0) = -sum_{p in Sigma, p != 0} E(p,p) - Z expanded.
std::map<BWord, Rational> rebase(const TensorElem& x,
                                 const std::set<Point>& sigma);

// Written order: letters.front() is (q_n,p_n), letters.back() is (q_1,p_1).
struct SelectedWord {
  TensorWord letters;
  Rational coefficient;

  std::size_t n() const { return letters.size(); }
  const UnitLetter& from_right(std::size_t k) const {
    return letters[letters.size() - k];
  }
};

// Throws std::invalid_argument for zero or scalar x.
SelectedWord select_word(const TensorElem& x, const std::set<Point>& sigma);

LevelMap build_t_endo(const TensorWord& word);
// h(x)' applied to (p_1, 0): t added on each side where the word ends in an
// alpha letter.
LevelVec evaluate_hx(const TensorElem& x, const LevelMap& t,
                     const TensorWord& word);

struct EndoWitness {
  std::set<Point> sigma;
  SelectedWord word;  // empty for scalar x
  LevelMap t;
  LevelPoint start;
  LevelVec result;
  LevelPoint target;  // (q_n, n+1)
  Rational target_coefficient;

  std::size_t n() const { return word.n(); }
  bool certified() const { return target_coefficient != 0; }
};

// Throws std::invalid_argument for x = 0. A scalar x uses t = (0,0)<->(0,1)
// and the single left t.
EndoWitness endo_witness(const TensorElem& x);

}  // namespace coplab
