#pragma once

#include "rlse/algebra.hpp"
#include "rlse/verdict.hpp"

namespace rlse {

// RLSE -> orthomodular lattice:
//   x v y := (x+1)(y+1)+1,  x /\ y := xy,  x' := x+1.
// Throws NotAnRlse if check_rlse fails, InternalInconsistency if the result
// is not orthomodular.
OrthoLattice l_of_r(const RingLikeAlgebra& alg);

// Orthomodular lattice -> specific RLSE:
//   x + y := (x /\ y') v (x' /\ y),  xy := x /\ y.
// Throws NotOrthomodular if the precondition fails; the output is verified
// to pass check_rlse and check_specific.
RingLikeAlgebra r_of_l(const OrthoLattice& lat);

// For a specific RLSE asserts r_of_l(l_of_r(alg)) == alg table-for-table;
// for a non-specific RLSE asserts the roundtrip reproduces times but NOT
// plus.
Verdict check_roundtrips(const RingLikeAlgebra& alg);

// Meet distributes over join, exhaustively over triples.
Verdict is_boolean_algebra(const OrthoLattice& lat);

// For a specific RLSE: x(y+1) = xy + x at (a,b) holds iff a,b commute.
Verdict check_cor2_pairwise(const RingLikeAlgebra& alg, int a, int b);

}  // namespace rlse
