#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlse/events.hpp"

namespace rlse {

// Verdict of the Boolean-embeddability procedure. On failure `failing`
// names the two subsets (indices into the tested set) and the two evaluated
// sides of the violated equation.
struct EmbeddabilityReport {
    enum class Mode { explicit_ambient, two_valued_concrete };

    bool embeddable = true;
    Mode mode = Mode::explicit_ambient;
    struct FailingPair {
        std::vector<int> subset_a;
        std::vector<int> subset_b;
        NumericalEvent lhs;
        NumericalEvent rhs;
    };
    std::optional<FailingPair> failing_pair;
    int k_reached = 0;
};

// P2 = {p,q} relative to an explicit ambient family: embeddable iff
// p (.) (1-q) = p - p (.) q as real functions, with (.) the inf in the
// ambient. Throws NotMember.
EmbeddabilityReport embeddable_pair(const EventFamily& ambient, int p, int q);

// Two-valued concrete reading: (.) = pointwise minimum; checks
// p (.) q = pq pointwise. Throws NotTwoValued.
EmbeddabilityReport embeddable_pair_two_valued(const NumericalEvent& p,
                                               const NumericalEvent& q);

// The k-subset procedure: for k = 1..n-1 and every k-element subsets A,B of
// the tested set, check prod_R A (.) (1 - prod_R B) = prod_R A - prod_R A (.) prod_R B
// with prod_R the iterated inf in the ambient. First failing (A,B) in
// lexicographic order is reported.
EmbeddabilityReport embeddable_set(const EventFamily& ambient,
                                   const std::vector<int>& subset_indices);

// Same loop for two-valued events without an ambient: prod_R = pointwise
// min, condition prod_R A (.) prod_R B = prod (A u B) (real product over the
// set union).
EmbeddabilityReport embeddable_set_two_valued(const std::vector<NumericalEvent>& events);

// Independent ground truth: enumerates complement-closed subsets of the
// ambient containing the target plus 0,1 that are closed under inf/sup in
// the ambient and form a distributive complemented sublattice.
bool oracle_embeddable(const EventFamily& ambient, const std::vector<int>& subset_indices,
                       int ambient_cap = 24);

// "classical-compatible" or "non-classical (quantum) relative to ambient".
std::string classify(const EmbeddabilityReport& report);

}  // namespace rlse
