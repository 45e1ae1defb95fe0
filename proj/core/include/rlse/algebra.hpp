#pragma once

#include <string>
#include <vector>

#include "rlse/verdict.hpp"

namespace rlse {

// A finite algebra (R,+,*,0,1) given by explicit operation tables over the
// carrier {0,...,size-1}. No law is assumed by the type; everything is
// checked by the functions below.
struct RingLikeAlgebra {
    int size = 0;
    std::vector<int> plus_tab;   // row-major size*size
    std::vector<int> times_tab;  // row-major size*size
    int zero = 0;
    int one = 0;
    std::vector<std::string> element_names;  // optional, empty or size entries

    int plus(int x, int y) const { return plus_tab[x * size + y]; }
    int times(int x, int y) const { return times_tab[x * size + y]; }
    std::string name(int i) const;

    // Totality of the tables, index ranges, zero != one for size >= 2.
    // Throws ParseError on violation.
    void validate() const;

    bool operator==(const RingLikeAlgebra& other) const {
        return size == other.size && plus_tab == other.plus_tab &&
               times_tab == other.times_tab && zero == other.zero && one == other.one;
    }
};

// A finite bounded lattice with a unary complement, again as raw tables.
struct OrthoLattice {
    int size = 0;
    std::vector<int> meet_tab;
    std::vector<int> join_tab;
    std::vector<int> comp_tab;
    int zero = 0;
    int one = 0;
    std::vector<std::string> element_names;

    int meet(int x, int y) const { return meet_tab[x * size + y]; }
    int join(int x, int y) const { return join_tab[x * size + y]; }
    int comp(int x) const { return comp_tab[x]; }
    std::string name(int i) const;

    // x <= y iff x /\ y = x
    bool leq(int x, int y) const { return meet(x, y) == x; }

    void validate() const;  // totality + comp is a permutation

    bool operator==(const OrthoLattice& other) const {
        return size == other.size && meet_tab == other.meet_tab &&
               join_tab == other.join_tab && comp_tab == other.comp_tab &&
               zero == other.zero && one == other.one;
    }
};

// Explicit reflexive/antisymmetric/transitive relation, verified on
// construction.
struct PartialOrder {
    int size = 0;
    std::vector<char> leq_tab;

    bool leq(int x, int y) const { return leq_tab[x * size + y] != 0; }

    // Throws NotAPartialOrder with a witness if the relation fails one of
    // the three laws.
    static PartialOrder from_relation(int size, std::vector<char> leq_tab);
};

// Size above which triple-quantified checks emit a stderr warning, and the
// hard cap enforced by validate().
inline constexpr int kWarnSize = 64;
inline constexpr int kMaxSize = 128;

// --- algebra_core operations -------------------------------------------

// x <= y iff xy = x. Throws NotAPartialOrder if the relation derived from
// `times` is not a partial order.
PartialOrder derive_order(const RingLikeAlgebra& alg);

// (R,*,0,1) a bounded meet-semilattice: * associative, commutative,
// idempotent, x*1 = x, x*0 = 0.
Verdict check_meet_semilattice(const RingLikeAlgebra& alg);

// Meet-semilattice + identities R1..R4, checked in that order; the first
// failing law's verdict is returned.
Verdict check_rlse(const RingLikeAlgebra& alg);

Verdict check_specific(const RingLikeAlgebra& alg);              // R5
Verdict check_weakly_distributive(const RingLikeAlgebra& alg);   // R6
Verdict check_weakly_associative(const RingLikeAlgebra& alg);    // R7
Verdict check_characteristic_two(const RingLikeAlgebra& alg);    // x+x = 0
Verdict check_near_rlse(const RingLikeAlgebra& alg);             // semilattice + R1 + R2

// Single identities R3 / R4 on their own (used by the max-min structure
// report, where they split from the full RLSE battery).
Verdict check_identity_r3(const RingLikeAlgebra& alg);
Verdict check_identity_r4(const RingLikeAlgebra& alg);

// W1..W6 individually; check_w_axioms combines them (first failure wins).
std::vector<Verdict> check_w_axioms_each(const RingLikeAlgebra& alg);
Verdict check_w_axioms(const RingLikeAlgebra& alg);

// Full Boolean-ring battery: + associative/commutative with neutral 0 and
// x+x = 0, * associative/commutative/idempotent with neutral 1, and
// distributivity of * over +.
Verdict check_boolean_ring(const RingLikeAlgebra& alg);

// Conditions (a) x+y = y+x, (b) x+1 = x', (c) x+y = x v y whenever x <= y',
// for a candidate plus table over an orthomodular lattice. Passing certifies
// that (carrier, plus, meet, 0, 1) is an RLSE.
Verdict check_th1_conditions(const OrthoLattice& lat, const std::vector<int>& plus_tab);

// Standard ortholattice battery: lattice laws, bounds, complementation,
// involution, antitonicity, De Morgan.
Verdict check_ortholattice(const OrthoLattice& lat);

// x <= y implies y = x v (x' /\ y). Assumes check_ortholattice passes.
Verdict check_orthomodular(const OrthoLattice& lat);

// Ring-side commuting: xy + x(y+1) = x.
bool commutes_rlse(const RingLikeAlgebra& alg, int a, int b);

// Ring-side commutator c(x,y) = (xy + x(y+1)) + ((x+1)y + (x+1)(y+1)).
int commutator_rlse(const RingLikeAlgebra& alg, int a, int b);

// Lattice-side commuting: (x /\ y) v (x /\ y') = x.
bool commutes_lattice(const OrthoLattice& lat, int a, int b);

// Lattice-side commutator (x/\y) v (x/\y') v (x'/\y) v (x'/\y').
int commutator_lattice(const OrthoLattice& lat, int a, int b);

// Ring-side orthogonality: x(1+y) = x.
bool orthogonal_rlse(const RingLikeAlgebra& alg, int a, int b);

}  // namespace rlse
