#pragma once

#include <functional>
#include <vector>

#include "rlse/algebra.hpp"
#include "rlse/events.hpp"

namespace rlse {

// 2^n with symmetric difference and intersection; n <= 4.
RingLikeAlgebra boolean_ring(int n_atoms);

// Horizontal sum MO_n: 0 < a_1, a_1', ..., a_n, a_n' < 1 with all middle
// elements pairwise incomparable except nothing (complement pairs meet at 0,
// join at 1). Index order: 0, a_1, a_1', ..., a_n, a_n', 1.
OrthoLattice mo_lattice(int n);

// r_of_l(mo_lattice(n)).
RingLikeAlgebra specific_rlse_mo(int n);

// The characteristic-2 RLSE over MO_2 with a+b = a'+b' = c and
// a+b' = a'+b = c' for the two incomparable atom pairs; all other cells
// forced by commutativity, x+1 = x' and x+y = x v y for x <= y'.
// Throws InvalidIndex if c is out of range.
RingLikeAlgebra weakly_associative_mo2(int c);

// {0, {1,2}, {3,4}, {1,3}, {2,4}, S} as characteristic vectors over
// S = {1,2,3,4}, ordered to match specific_rlse_mo(2) index-for-index.
EventFamily concrete_mo2_events();

// All commutative plus tables over an orthomodular lattice satisfying
// x+1 = x', x+y = x v y for x <= y' (free cells swept over the carrier),
// in deterministic odometer order, truncated at limit. Each returned
// algebra is verified to pass check_rlse. Throws TooLarge for size > 8.
std::vector<RingLikeAlgebra> enumerate_plus_extensions(const OrthoLattice& lat,
                                                       std::size_t limit);

// Callback form of the same enumeration (no verification, no storage);
// return false from the callback to stop early.
void for_each_plus_extension(const OrthoLattice& lat,
                             const std::function<bool(const RingLikeAlgebra&)>& fn);

// Number of free plus-cells of the lattice (unordered non-orthogonal pairs).
std::vector<std::pair<int, int>> free_plus_cells(const OrthoLattice& lat);

// Benzene ring O6: the standard six-element ortholattice that is not
// orthomodular (0 < a < b < 1 and 0 < b' < a' < 1). Used as a negative
// fixture.
OrthoLattice benzene_o6();

}  // namespace rlse
