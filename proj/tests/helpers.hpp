#pragma once

#include <string>
#include <vector>

#include "rlse/events.hpp"

namespace rlse::testing {

// Characteristic vector of a subset of {0..n_states-1} given as a bitmask.
inline NumericalEvent char_vector(int n_states, unsigned mask) {
    NumericalEvent e;
    e.values.assign(n_states, Rational(0));
    for (int s = 0; s < n_states; ++s)
        if (mask & (1u << s)) e.values[s] = Rational(1);
    return e;
}

// The full power set of an n-state space as a two-valued event family.
inline EventFamily power_set_family(int n_states) {
    std::vector<std::string> labels;
    for (int s = 0; s < n_states; ++s) labels.push_back("s" + std::to_string(s + 1));
    std::vector<NumericalEvent> events;
    for (unsigned mask = 0; mask < (1u << n_states); ++mask)
        events.push_back(char_vector(n_states, mask));
    return EventFamily::make(StateSpace::make(labels), std::move(events));
}

// Family over a single state whose values are the multiples of 1/k.
inline EventFamily scalar_grid_family(int k) {
    std::vector<NumericalEvent> events;
    for (int i = 0; i <= k; ++i) events.push_back(NumericalEvent{{Rational(i, k)}});
    return EventFamily::make(StateSpace::make({"s"}), std::move(events));
}

// {0, 1, p, 1-p} over two states with p and 1-p incomparable, so the in-family
// inf of the pair is 0 and the family is Boolean.
inline EventFamily four_element_boolean_family() {
    NumericalEvent p{{Rational(2, 3), Rational(0)}};
    return EventFamily::make(
        StateSpace::make({"s1", "s2"}),
        {char_vector(2, 0u), char_vector(2, 3u), p, complement(p)});
}

// All reduced and unreduced fractions num/den with den in 1..max_den.
inline std::vector<Rational> unit_fractions(int max_den) {
    std::vector<Rational> out;
    for (int den = 1; den <= max_den; ++den)
        for (int num = 0; num <= den; ++num) out.push_back(Rational(num, den));
    return out;
}

}  // namespace rlse::testing
