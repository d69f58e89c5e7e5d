#pragma once

// Text grammars for groups, subgroups, lattices, windows and adelic data.
//
//   group      Z4 | Z4xZ2 | Z2xZ3xZ8
//   subgroup   gens=(2,0),(0,2)          tuples of group coordinates; bare integers for rank 1
//   lattice    plane-gens=((2,0),(0,2))  tuples of x coordinates followed by w coordinates
//              plane-gens=(X)x(W)        separable: time generators X, frequency generators W
//              critical=(2)              Lambda x Lambda^perp
//              full-time | full-plane
//   window     delta0 | delta<k> | gauss | const | random
//              JSON array of reals or [re,im] pairs, e.g. [[1,0],[0,0.5]]
//   adele      diag=(5/2)  |  inf=(2); 2=(1)
//   automorphism file, one "key = value" per line, '#' comments:
//              n = 2
//              S = 2,3
//              Ainf = [[1,0],[0,1/2]]
//              A2 = [[2,0],[0,1]]

#include "lcagabor/adeles.hpp"
#include "lcagabor/finite_lca.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/padic.hpp"
#include "lcagabor/random.hpp"
#include "lcagabor/window.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lcagabor {

FiniteLcaGroup parse_group(std::string_view text);

/// "(1,2),(3,4)" or "((1,2),(3,4))" or "1,2" (rank-1 bare integers). Each tuple must have `width` entries.
std::vector<std::vector<int>> parse_tuple_list(std::string_view text, std::size_t width);

Subgroup parse_subgroup(const FiniteLcaGroup& group, std::string_view text);
std::string format_subgroup(const Subgroup& subgroup);

TfLattice parse_lattice(const FiniteLcaGroup& group, std::string_view text);
/// plane-gens literal listing the stored generators.
std::string format_lattice(const TfLattice& lattice);

/// `random` draws from `rng`.
Window parse_window(const FiniteLcaGroup& group, std::string_view text, Rng& rng);

/// "[[1,0],[0,1/2]]"
RationalMatrix parse_rational_matrix(std::string_view text);

std::vector<int64_t> parse_prime_list(std::string_view text);

AdeleAutomorphism parse_automorphism(std::string_view document);

AdeleVector parse_adele_vector(std::string_view text, const PlaceSet& places);

}  // namespace lcagabor
