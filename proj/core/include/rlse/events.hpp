#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rlse/algebra.hpp"
#include "rlse/rational.hpp"
#include "rlse/verdict.hpp"

namespace rlse {

// Finite labeled state space; events are positionally indexed by it.
struct StateSpace {
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(labels.size()); }

    // Throws ParseError on empty space or duplicate labels.
    static StateSpace make(std::vector<std::string> labels);

    bool operator==(const StateSpace&) const = default;
};

// A numerical event: one exact probability per state.
struct NumericalEvent {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }
    bool two_valued() const;

    bool operator==(const NumericalEvent&) const = default;
};

NumericalEvent constant_event(int n_states, const Rational& value);
NumericalEvent complement(const NumericalEvent& p);  // 1 - p pointwise

bool leq(const NumericalEvent& p, const NumericalEvent& q);         // pointwise <=
bool orthogonal(const NumericalEvent& p, const NumericalEvent& q);  // p <= q'

NumericalEvent event_sum(const NumericalEvent& p, const NumericalEvent& q);
NumericalEvent event_product(const NumericalEvent& p, const NumericalEvent& q);
NumericalEvent event_diff(const NumericalEvent& p, const NumericalEvent& q);

// Scalar max-min operations on [0,1].
Rational oplus_scalar(const Rational& a, const Rational& b);  // max - min
Rational odot_scalar(const Rational& a, const Rational& b);   // min

// Pointwise max-min operations on events over a common space.
NumericalEvent maxmin_oplus(const NumericalEvent& p, const NumericalEvent& q);
NumericalEvent maxmin_odot(const NumericalEvent& p, const NumericalEvent& q);

// The five scalar identities mirroring R1..R5, each evaluated directly,
// together with the predicted side conditions for (iii) and (iv).
struct Lemma2Record {
    std::array<bool, 5> holds{};           // equalities (i)..(v) as evaluated
    bool cond_iii = false;                 // b >= min(a, 1-a)
    bool cond_iv = false;                  // a in {0,1} or b = 0
    bool consistent = false;               // (i),(ii),(v) hold and (iii)/(iv) match conditions
};
Lemma2Record check_lemma2_conditions(const Rational& a, const Rational& b);

// A finite family of distinct events over one space, with cached structural
// flags (recomputable from scratch; see recompute_flags in tests).
struct EventFamily {
    StateSpace space;
    std::vector<NumericalEvent> events;
    std::vector<std::string> event_names;  // optional display labels

    // cached flags
    bool contains_0_1 = false;
    bool complement_closed = false;
    bool orthosum_closed = false;   // p _|_ q implies p+q in family
    bool triple_sum_closed = false; // S3
    bool lattice_ordered = false;
    bool two_valued = false;

    int size() const { return static_cast<int>(events.size()); }
    std::string event_name(int i) const;
    int index_of(const NumericalEvent& e) const;  // -1 if absent
    int index_of_name(const std::string& name) const;
    int zero_index() const;
    int one_index() const;

    // Index of the greatest lower / least upper bound of events i,j within
    // the family under pointwise order, or -1 if none exists.
    int inf_in_family(int i, int j) const;
    int sup_in_family(int i, int j) const;

    // Validates distinctness and ranges, computes the flags.
    static EventFamily make(StateSpace space, std::vector<NumericalEvent> events);
};

// (S1) 0,1 in P, (S2) complement closed, (S3) mutually orthogonal triples
// have their function sum in P.
Verdict check_s_probability_algebra(const EventFamily& fam);

// (S1), (S2) and the r = 0 special case of (S3) only.
Verdict check_gfe(const EventFamily& fam);

// Every pair has a glb and lub within the family under pointwise order.
Verdict check_lattice_ordered(const EventFamily& fam);

// The RLSE associated to the family: times = inf-in-family,
// plus = (p /\ q') v (p' /\ q). Requires check_s_probability_algebra and
// check_lattice_ordered; output verified to pass check_rlse and
// check_specific. Throws PreconditionError.
RingLikeAlgebra rlse_of_events(const EventFamily& fam);

// Function-level identities of the associated RLSE:
//   (i)  p (+) q = p (.) (1-q) + (1-p) (.) q
//   (ii) p <= q implies p (+) q = q - p
//   (iii) p (+) 1 = 1 - p
//   (iv) p _|_ q implies p (+) q = p + q
Verdict check_prop3(const EventFamily& fam);

// For two-valued p,q: p(+)q = p + q - 2pq and p(.)q = pq pointwise under the
// max-min operations. Throws NotTwoValued.
Verdict lemma1_check(const NumericalEvent& p, const NumericalEvent& q);

// Result of the max-min structure check on a closed family.
struct QStructureReport {
    Verdict near_rlse;     // (i) specific near-RLSE: semilattice + R1,R2,R5
    Verdict specific;
    Verdict gfe;           // (ii) w.r.t. pointwise order
    bool two_valued = false;  // (a)
    bool r3 = false;          // (b)
    bool r4 = false;          // (c)
    bool rlse = false;        // (d)
    bool boolean_ring = false;  // (e)
    Verdict r3_verdict;
    Verdict r4_verdict;
    bool equivalent = false;  // (a)..(e) all true or all false
    bool passed = false;      // (i),(ii) pass and (iii) equivalence holds
};

// Requires 0,1 in the family and closure under maxmin_oplus/maxmin_odot
// (throws NotClosed with the witness pair otherwise). Builds the algebra
// with plus = maxmin_oplus, times = maxmin_odot and evaluates the report.
QStructureReport check_q_structure(const EventFamily& fam);
Verdict check_q_structure_verdict(const EventFamily& fam);

// Iterates maxmin closure to a fixed point; throws TooLarge if the family
// would exceed max_size.
EventFamily close_under_maxmin(const EventFamily& fam, int max_size = 256);

}  // namespace rlse
