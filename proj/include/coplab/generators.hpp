#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "coplab/coproduct.hpp"
#include "coplab/finite_monoid.hpp"
#include "coplab/ground.hpp"
#include "coplab/relation.hpp"
#include "coplab/rng.hpp"
#include "coplab/tensor.hpp"

namespace coplab {

// Map of {0..points-1} (identity beyond), optionally a permutation.
FinSuppEndo random_endo(Rng& rng, Point points, bool permutation = false);
std::set<Point> random_subset(Rng& rng, Point universe);

// Transpositions of {0..4}, then shifts a -> a+1 and two-point collapses, all
// mod 5: twenty distinct non-identity maps.
std::vector<FinSuppEndo> sym_pool();

// Letters with tags < tags and arbitrary elements; neither reduced nor
// alternating.
std::vector<Letter<Elem>> random_raw_table_word(
    Rng& rng, const std::vector<FiniteMonoid>& monoids, std::size_t length);
// Reduced word of the given length.
TableWord random_table_word(Rng& rng, const Coproduct<Elem>& cop,
                            const std::vector<FiniteMonoid>& monoids,
                            std::size_t length);
EndoWord random_endo_word(Rng& rng, const Coproduct<FinSuppEndo>& cop,
                          const std::vector<FinSuppEndo>& pool,
                          std::size_t length);
// Every reduced word of length <= max_len over the pool, shortest first.
std::vector<EndoWord> all_endo_words(const Coproduct<FinSuppEndo>& cop,
                                     const std::vector<FinSuppEndo>& pool,
                                     std::size_t max_len);
std::vector<TableWord> all_table_words(const Coproduct<Elem>& cop,
                                       const std::vector<FiniteMonoid>& monoids,
                                       std::size_t max_len);

RelMat random_rel(Rng& rng, std::uint32_t n);

// Sum of up to max_words products of E(q,p) letters, q, p <= max_index, with
// coefficients in {-2,-1,1,2}; retried until nonzero.
TensorElem random_tensor(Rng& rng, std::size_t max_words = 3,
                         std::size_t max_len = 3, Point max_index = 3);

}  // namespace coplab
