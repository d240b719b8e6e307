#include "coplab/coproduct.hpp"

#include <memory>

namespace coplab {

std::string tag_name(std::size_t tag) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + tag % 26));
    tag /= 26;
  } while (tag-- > 0);
  return s;
}

Coproduct<FinSuppEndo> endo_coproduct(std::size_t copies) {
  std::vector<Factor<FinSuppEndo>> factors;
  for (std::size_t i = 0; i < copies; ++i) {
    Factor<FinSuppEndo> f;
    f.name = tag_name(i);
    f.multiply = [](const FinSuppEndo& a, const FinSuppEndo& b) {
      return compose(a, b);
    };
    f.inverse = [](const FinSuppEndo& a) -> std::optional<FinSuppEndo> {
      if (!is_permutation(a)) return std::nullopt;
      return coplab::inverse(a);
    };
    f.format = [](const FinSuppEndo& a) { return to_string(a); };
    f.parse = [](std::string_view s) { return parse_endo(s); };
    factors.push_back(std::move(f));
  }
  return Coproduct<FinSuppEndo>(std::move(factors));
}

Coproduct<Elem> table_coproduct(const std::vector<FiniteMonoid>& monoids) {
  std::vector<Factor<Elem>> factors;
  for (std::size_t i = 0; i < monoids.size(); ++i) {
    auto m = std::make_shared<const FiniteMonoid>(monoids[i]);
    Factor<Elem> f;
    f.name = tag_name(i);
    f.identity = m->identity();
    f.multiply = [m](Elem a, Elem b) { return m->mul(a, b); };
    f.inverse = [m](Elem a) { return m->inverse(a); };
    f.format = [m](Elem a) { return m->name(a); };
    f.parse = [m](std::string_view s) { return m->parse(s); };
    factors.push_back(std::move(f));
  }
  return Coproduct<Elem>(std::move(factors));
}

}  // namespace coplab
