#include "rlse/embeddability.hpp"

#include <algorithm>

#include "rlse/errors.hpp"

namespace rlse {

namespace {

void require_members(const EventFamily& ambient, const std::vector<int>& idx) {
    for (int i : idx)
        if (i < 0 || i >= ambient.size())
            throw NotMember("index " + std::to_string(i) + " is not an ambient member");
}

// Iterated inf in the ambient over a nonempty index set (left fold).
int fold_inf(const EventFamily& ambient, const std::vector<int>& idx) {
    int acc = idx.front();
    for (std::size_t i = 1; i < idx.size(); ++i) {
        acc = ambient.inf_in_family(acc, idx[i]);
        if (acc < 0) throw PreconditionError("ambient is not lattice ordered");
    }
    return acc;
}

// The pair condition of the embeddability criterion, with (.) = ambient inf:
//   a (.) (1-b) = a - a (.) b   as real functions.
bool pair_condition(const EventFamily& ambient, int a, int b,
                    NumericalEvent* lhs_out, NumericalEvent* rhs_out) {
    const auto& pa = ambient.events[a];
    const auto& pb = ambient.events[b];
    int comp_b = ambient.index_of(complement(pb));
    if (comp_b < 0) throw PreconditionError("ambient is not complement closed");
    int lhs_idx = ambient.inf_in_family(a, comp_b);
    int ab = ambient.inf_in_family(a, b);
    if (lhs_idx < 0 || ab < 0) throw PreconditionError("ambient is not lattice ordered");
    NumericalEvent lhs = ambient.events[lhs_idx];
    NumericalEvent rhs = event_diff(pa, ambient.events[ab]);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return lhs == rhs;
}

// All k-element subsets of {0..n-1} in lexicographic order.
void k_subsets(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        if (!fn(pick)) return;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

EmbeddabilityReport embeddable_pair(const EventFamily& ambient, int p, int q) {
    require_members(ambient, {p, q});
    EmbeddabilityReport rep;
    rep.mode = EmbeddabilityReport::Mode::explicit_ambient;
    rep.k_reached = 1;
    NumericalEvent lhs, rhs;
    if (!pair_condition(ambient, p, q, &lhs, &rhs)) {
        rep.embeddable = false;
        rep.failing_pair = EmbeddabilityReport::FailingPair{{0}, {1}, lhs, rhs};
    }
    return rep;
}

EmbeddabilityReport embeddable_pair_two_valued(const NumericalEvent& p,
                                               const NumericalEvent& q) {
    if (!p.two_valued() || !q.two_valued())
        throw NotTwoValued("two-valued mode requires 0/1 events");
    EmbeddabilityReport rep;
    rep.mode = EmbeddabilityReport::Mode::two_valued_concrete;
    rep.k_reached = 1;
    NumericalEvent lhs = maxmin_odot(p, q);
    NumericalEvent rhs = event_product(p, q);
    if (lhs != rhs) {
        rep.embeddable = false;
        rep.failing_pair = EmbeddabilityReport::FailingPair{{0}, {1}, lhs, rhs};
    }
    return rep;
}

EmbeddabilityReport embeddable_set(const EventFamily& ambient,
                                   const std::vector<int>& subset_indices) {
    require_members(ambient, subset_indices);
    const int n = static_cast<int>(subset_indices.size());
    if (n < 2) throw PreconditionError("embeddable_set needs at least two events");
    EmbeddabilityReport rep;
    rep.mode = EmbeddabilityReport::Mode::explicit_ambient;
    for (int k = 1; k <= n - 1; ++k) {
        rep.k_reached = k;
        bool ok = true;
        k_subsets(n, k, [&](const std::vector<int>& a_pick) {
            std::vector<int> a_idx;
            for (int i : a_pick) a_idx.push_back(subset_indices[i]);
            int prod_a = fold_inf(ambient, a_idx);
            bool inner_ok = true;
            k_subsets(n, k, [&](const std::vector<int>& b_pick) {
                std::vector<int> b_idx;
                for (int i : b_pick) b_idx.push_back(subset_indices[i]);
                int prod_b = fold_inf(ambient, b_idx);
                NumericalEvent lhs, rhs;
                if (!pair_condition(ambient, prod_a, prod_b, &lhs, &rhs)) {
                    rep.embeddable = false;
                    rep.failing_pair =
                        EmbeddabilityReport::FailingPair{a_pick, b_pick, lhs, rhs};
                    inner_ok = false;
                    return false;
                }
                return true;
            });
            ok = inner_ok;
            return inner_ok;
        });
        if (!ok) return rep;
    }
    return rep;
}

EmbeddabilityReport embeddable_set_two_valued(const std::vector<NumericalEvent>& events) {
    for (const auto& e : events)
        if (!e.two_valued()) throw NotTwoValued("two-valued mode requires 0/1 events");
    const int n = static_cast<int>(events.size());
    if (n < 2) throw PreconditionError("embeddable_set needs at least two events");
    for (int i = 1; i < n; ++i)
        if (events[i].size() != events[0].size())
            throw SpaceMismatch("events live over different state spaces");
    auto fold_min = [&](const std::vector<int>& pick) {
        NumericalEvent acc = events[pick.front()];
        for (std::size_t i = 1; i < pick.size(); ++i)
            acc = maxmin_odot(acc, events[pick[i]]);
        return acc;
    };
    EmbeddabilityReport rep;
    rep.mode = EmbeddabilityReport::Mode::two_valued_concrete;
    for (int k = 1; k <= n - 1; ++k) {
        rep.k_reached = k;
        bool ok = true;
        k_subsets(n, k, [&](const std::vector<int>& a_pick) {
            NumericalEvent prod_a = fold_min(a_pick);
            bool inner_ok = true;
            k_subsets(n, k, [&](const std::vector<int>& b_pick) {
                NumericalEvent prod_b = fold_min(b_pick);
                // product over the set-theoretic union of A and B
                std::vector<int> uni = a_pick;
                for (int i : b_pick)
                    if (std::find(uni.begin(), uni.end(), i) == uni.end()) uni.push_back(i);
                NumericalEvent prod_union = events[uni.front()];
                for (std::size_t i = 1; i < uni.size(); ++i)
                    prod_union = event_product(prod_union, events[uni[i]]);
                NumericalEvent lhs = maxmin_odot(prod_a, prod_b);
                if (lhs != prod_union) {
                    rep.embeddable = false;
                    rep.failing_pair =
                        EmbeddabilityReport::FailingPair{a_pick, b_pick, lhs, prod_union};
                    inner_ok = false;
                    return false;
                }
                return true;
            });
            ok = inner_ok;
            return inner_ok;
        });
        if (!ok) return rep;
    }
    return rep;
}

bool oracle_embeddable(const EventFamily& ambient, const std::vector<int>& subset_indices,
                       int ambient_cap) {
    require_members(ambient, subset_indices);
    const int n = ambient.size();
    if (n > ambient_cap)
        throw AmbientTooLarge("oracle limited to ambients of size " +
                              std::to_string(ambient_cap));
    int zero = ambient.zero_index(), one = ambient.one_index();
    if (zero < 0 || one < 0) return false;
    std::vector<int> comp_idx(n);
    for (int i = 0; i < n; ++i) {
        comp_idx[i] = ambient.index_of(complement(ambient.events[i]));
        if (comp_idx[i] < 0) return false;
    }
    // required core: the target, 0, 1 and their complements
    std::vector<char> required(n, 0);
    required[zero] = required[one] = 1;
    for (int i : subset_indices) {
        required[i] = 1;
        required[comp_idx[i]] = 1;
    }
    // free complement orbits
    std::vector<std::pair<int, int>> orbits;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (required[i] || seen[i]) continue;
        seen[i] = seen[comp_idx[i]] = 1;
        orbits.emplace_back(i, comp_idx[i]);
    }
    auto is_boolean_subalgebra = [&](const std::vector<char>& in) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (in[i]) members.push_back(i);
        for (int a : members)
            for (int b : members) {
                int m = ambient.inf_in_family(a, b);
                int j = ambient.sup_in_family(a, b);
                if (m < 0 || j < 0 || !in[m] || !in[j]) return false;
                // complemented: a /\ a' = 0, a v a' = 1 (checked once per a)
            }
        for (int a : members) {
            if (ambient.inf_in_family(a, comp_idx[a]) != zero) return false;
            if (ambient.sup_in_family(a, comp_idx[a]) != one) return false;
        }
        for (int a : members)
            for (int b : members)
                for (int c : members) {
                    int l = ambient.inf_in_family(a, ambient.sup_in_family(b, c));
                    int r = ambient.sup_in_family(ambient.inf_in_family(a, b),
                                                  ambient.inf_in_family(a, c));
                    if (l != r) return false;
                }
        return true;
    };
    const std::size_t combos = std::size_t{1} << orbits.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        std::vector<char> in(required.begin(), required.end());
        for (std::size_t o = 0; o < orbits.size(); ++o)
            if (mask & (std::size_t{1} << o)) in[orbits[o].first] = in[orbits[o].second] = 1;
        if (is_boolean_subalgebra(in)) return true;
    }
    return false;
}

std::string classify(const EmbeddabilityReport& report) {
    return report.embeddable ? "classical-compatible"
                             : "non-classical (quantum) relative to ambient";
}

}  // namespace rlse
