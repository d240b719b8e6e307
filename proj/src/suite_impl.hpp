#pragma once

#include <chrono>

#include "coplab/suites.hpp"

namespace coplab::suites {

RunReport ground_laws(const Params& p);
RunReport coproduct_normal_form(const Params& p);
RunReport functorial_separator(const Params& p);
RunReport sym_exhaustive(const Params& p);
RunReport endo_random(const Params& p);
RunReport endo_vandermonde(const Params& p);
RunReport path_product(const Params& p);
RunReport rel_two_class(const Params& p);
RunReport rel_theta(const Params& p);
RunReport rel_embeddings(const Params& p);
RunReport rel_gzz(const Params& p);
RunReport lattice_eq_size(const Params& p);
RunReport lattice_centralizer(const Params& p);
RunReport lattice_debruijn(const Params& p);
RunReport lattice_solutions(const Params& p);
RunReport lattice_completeness(const Params& p);

}  // namespace coplab::suites
