#include "rlse/algebra.hpp"

#include <iostream>

#include "rlse/errors.hpp"

namespace rlse {

namespace {

std::string default_name(int i) { return "e" + std::to_string(i); }

void check_table(const std::vector<int>& tab, int size, const char* what) {
    if (static_cast<int>(tab.size()) != size * size)
        throw ParseError(std::string(what) + " table has wrong shape");
    for (int v : tab)
        if (v < 0 || v >= size)
            throw ParseError(std::string(what) + " table entry out of range");
}

void warn_if_large(int size) {
    if (size > kWarnSize)
        std::cerr << "warning: triple-quantified check on " << size
                  << " elements (cubic cost)\n";
}

}  // namespace

std::string RingLikeAlgebra::name(int i) const {
    if (i >= 0 && i < static_cast<int>(element_names.size())) return element_names[i];
    return default_name(i);
}

void RingLikeAlgebra::validate() const {
    if (size < 1) throw ParseError("algebra size must be positive");
    if (size > kMaxSize) throw ParseError("algebra exceeds size cap");
    check_table(plus_tab, size, "plus");
    check_table(times_tab, size, "times");
    if (zero < 0 || zero >= size || one < 0 || one >= size)
        throw ParseError("constant index out of range");
    if (size >= 2 && zero == one) throw ParseError("zero and one must differ");
    if (!element_names.empty() && static_cast<int>(element_names.size()) != size)
        throw ParseError("wrong number of element names");
}

std::string OrthoLattice::name(int i) const {
    if (i >= 0 && i < static_cast<int>(element_names.size())) return element_names[i];
    return default_name(i);
}

void OrthoLattice::validate() const {
    if (size < 1) throw ParseError("lattice size must be positive");
    if (size > kMaxSize) throw ParseError("lattice exceeds size cap");
    check_table(meet_tab, size, "meet");
    check_table(join_tab, size, "join");
    if (static_cast<int>(comp_tab.size()) != size)
        throw ParseError("comp table has wrong shape");
    std::vector<char> seen(size, 0);
    for (int v : comp_tab) {
        if (v < 0 || v >= size || seen[v]) throw ParseError("comp is not a permutation");
        seen[v] = 1;
    }
    if (zero < 0 || zero >= size || one < 0 || one >= size)
        throw ParseError("constant index out of range");
    if (size >= 2 && zero == one) throw ParseError("zero and one must differ");
    if (!element_names.empty() && static_cast<int>(element_names.size()) != size)
        throw ParseError("wrong number of element names");
}

PartialOrder PartialOrder::from_relation(int size, std::vector<char> leq_tab) {
    PartialOrder po;
    po.size = size;
    po.leq_tab = std::move(leq_tab);
    for (int x = 0; x < size; ++x)
        if (!po.leq(x, x))
            throw NotAPartialOrder("reflexivity fails",
                                   Verdict::fail("partial-order", {x}, 0, 1, "x !<= x"));
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            if (x != y && po.leq(x, y) && po.leq(y, x))
                throw NotAPartialOrder(
                    "antisymmetry fails",
                    Verdict::fail("partial-order", {x, y}, 0, 1, "x <= y and y <= x"));
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            for (int z = 0; z < size; ++z)
                if (po.leq(x, y) && po.leq(y, z) && !po.leq(x, z))
                    throw NotAPartialOrder(
                        "transitivity fails",
                        Verdict::fail("partial-order", {x, y, z}, 0, 1, "x !<= z"));
    return po;
}

PartialOrder derive_order(const RingLikeAlgebra& alg) {
    std::vector<char> leq(alg.size * alg.size, 0);
    for (int x = 0; x < alg.size; ++x)
        for (int y = 0; y < alg.size; ++y)
            leq[x * alg.size + y] = alg.times(x, y) == x ? 1 : 0;
    return PartialOrder::from_relation(alg.size, std::move(leq));
}

Verdict check_meet_semilattice(const RingLikeAlgebra& alg) {
    const int n = alg.size;
    warn_if_large(n);
    for (int x = 0; x < n; ++x) {
        if (alg.times(x, x) != x)
            return Verdict::fail("meet-semilattice", {x}, alg.times(x, x), x, "idempotence");
        if (alg.times(x, alg.one) != x)
            return Verdict::fail("meet-semilattice", {x}, alg.times(x, alg.one), x, "x*1 = x");
        if (alg.times(x, alg.zero) != alg.zero)
            return Verdict::fail("meet-semilattice", {x}, alg.times(x, alg.zero), alg.zero,
                                 "x*0 = 0");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (alg.times(x, y) != alg.times(y, x))
                return Verdict::fail("meet-semilattice", {x, y}, alg.times(x, y),
                                     alg.times(y, x), "commutativity");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l = alg.times(alg.times(x, y), z);
                int r = alg.times(x, alg.times(y, z));
                if (l != r)
                    return Verdict::fail("meet-semilattice", {x, y, z}, l, r, "associativity");
            }
    return Verdict::pass("meet-semilattice");
}

namespace {

// Checks a binary identity over all pairs; sides given as callables.
template <typename L, typename R>
Verdict check_pairs(const RingLikeAlgebra& alg, const char* law, L lhs, R rhs) {
    for (int x = 0; x < alg.size; ++x)
        for (int y = 0; y < alg.size; ++y) {
            int l = lhs(x, y), r = rhs(x, y);
            if (l != r) return Verdict::fail(law, {x, y}, l, r);
        }
    return Verdict::pass(law);
}

Verdict check_r1(const RingLikeAlgebra& a) {
    return check_pairs(a, "R1", [&](int x, int y) { return a.plus(x, y); },
                       [&](int x, int y) { return a.plus(y, x); });
}

Verdict check_r2(const RingLikeAlgebra& a) {
    return check_pairs(
        a, "R2",
        [&](int x, int y) {
            return a.plus(a.times(a.plus(a.times(x, y), a.one), a.plus(x, a.one)), a.one);
        },
        [&](int x, int) { return x; });
}

Verdict check_r3(const RingLikeAlgebra& a) {
    return check_pairs(
        a, "R3",
        [&](int x, int y) {
            return a.times(a.plus(a.times(a.plus(a.times(x, y), a.one), x), a.one), x);
        },
        [&](int x, int y) { return a.times(x, y); });
}

Verdict check_r4(const RingLikeAlgebra& a) {
    return check_pairs(
        a, "R4", [&](int x, int y) { return a.plus(a.times(x, y), a.plus(x, a.one)); },
        [&](int x, int y) { return a.plus(a.times(a.plus(a.times(x, y), a.one), x), a.one); });
}

}  // namespace

Verdict check_rlse(const RingLikeAlgebra& alg) {
    if (auto v = check_meet_semilattice(alg); !v) return v;
    if (auto v = check_r1(alg); !v) return v;
    if (auto v = check_r2(alg); !v) return v;
    if (auto v = check_r3(alg); !v) return v;
    if (auto v = check_r4(alg); !v) return v;
    return Verdict::pass("rlse");
}

Verdict check_specific(const RingLikeAlgebra& a) {
    return check_pairs(
        a, "R5", [&](int x, int y) { return a.plus(x, y); },
        [&](int x, int y) {
            return a.plus(a.times(x, a.plus(y, a.one)), a.times(a.plus(x, a.one), y));
        });
}

Verdict check_weakly_distributive(const RingLikeAlgebra& a) {
    return check_pairs(
        a, "R6", [&](int x, int y) { return a.times(a.plus(a.times(x, y), a.one), x); },
        [&](int x, int y) { return a.plus(a.times(x, y), x); });
}

Verdict check_weakly_associative(const RingLikeAlgebra& a) {
    return check_pairs(
        a, "R7", [&](int x, int y) { return a.plus(a.plus(x, y), a.one); },
        [&](int x, int y) { return a.plus(x, a.plus(y, a.one)); });
}

Verdict check_characteristic_two(const RingLikeAlgebra& a) {
    for (int x = 0; x < a.size; ++x)
        if (a.plus(x, x) != a.zero)
            return Verdict::fail("characteristic-two", {x}, a.plus(x, x), a.zero);
    return Verdict::pass("characteristic-two");
}

Verdict check_near_rlse(const RingLikeAlgebra& alg) {
    if (auto v = check_meet_semilattice(alg); !v) return v;
    if (auto v = check_r1(alg); !v) return v;
    if (auto v = check_r2(alg); !v) return v;
    return Verdict::pass("near-rlse");
}

Verdict check_identity_r3(const RingLikeAlgebra& alg) { return check_r3(alg); }

Verdict check_identity_r4(const RingLikeAlgebra& alg) { return check_r4(alg); }

std::vector<Verdict> check_w_axioms_each(const RingLikeAlgebra& a) {
    std::vector<Verdict> out;
    // W1: 0+1 = 1
    if (a.plus(a.zero, a.one) == a.one)
        out.push_back(Verdict::pass("W1"));
    else
        out.push_back(Verdict::fail("W1", {}, a.plus(a.zero, a.one), a.one));
    out.push_back(check_r1(a));
    out.back().law = "W2";
    out.push_back(check_pairs(
        a, "W3", [&](int x, int y) { return a.plus(a.plus(a.times(x, y), x), a.one); },
        [&](int x, int y) { return a.plus(a.times(x, y), a.plus(x, a.one)); }));
    out.push_back(check_pairs(
        a, "W4", [&](int x, int y) { return a.plus(a.plus(a.times(x, y), x), x); },
        [&](int x, int y) { return a.plus(a.times(x, y), a.plus(x, x)); }));
    out.push_back(check_pairs(
        a, "W5", [&](int x, int y) { return a.times(a.plus(a.times(x, y), a.one), x); },
        [&](int x, int y) { return a.plus(a.times(x, y), x); }));
    out.push_back(check_pairs(
        a, "W6",
        [&](int x, int y) { return a.times(a.plus(a.times(x, y), a.one), a.plus(x, a.one)); },
        [&](int x, int y) {
            return a.plus(a.times(a.times(x, y), a.plus(x, a.one)), a.plus(x, a.one));
        }));
    return out;
}

Verdict check_w_axioms(const RingLikeAlgebra& a) {
    for (auto& v : check_w_axioms_each(a))
        if (!v) return v;
    return Verdict::pass("W1-W6");
}

Verdict check_boolean_ring(const RingLikeAlgebra& a) {
    const int n = a.size;
    warn_if_large(n);
    for (int x = 0; x < n; ++x) {
        if (a.plus(x, a.zero) != x)
            return Verdict::fail("boolean-ring", {x}, a.plus(x, a.zero), x, "x+0 = x");
        if (a.plus(x, x) != a.zero)
            return Verdict::fail("boolean-ring", {x}, a.plus(x, x), a.zero, "x+x = 0");
        if (a.times(x, x) != x)
            return Verdict::fail("boolean-ring", {x}, a.times(x, x), x, "idempotence");
        if (a.times(x, a.one) != x)
            return Verdict::fail("boolean-ring", {x}, a.times(x, a.one), x, "x*1 = x");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (a.plus(x, y) != a.plus(y, x))
                return Verdict::fail("boolean-ring", {x, y}, a.plus(x, y), a.plus(y, x),
                                     "+ commutativity");
            if (a.times(x, y) != a.times(y, x))
                return Verdict::fail("boolean-ring", {x, y}, a.times(x, y), a.times(y, x),
                                     "* commutativity");
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l = a.plus(a.plus(x, y), z), r = a.plus(x, a.plus(y, z));
                if (l != r)
                    return Verdict::fail("boolean-ring", {x, y, z}, l, r, "+ associativity");
                l = a.times(a.times(x, y), z);
                r = a.times(x, a.times(y, z));
                if (l != r)
                    return Verdict::fail("boolean-ring", {x, y, z}, l, r, "* associativity");
                l = a.times(x, a.plus(y, z));
                r = a.plus(a.times(x, y), a.times(x, z));
                if (l != r)
                    return Verdict::fail("boolean-ring", {x, y, z}, l, r, "distributivity");
            }
    return Verdict::pass("boolean-ring");
}

Verdict check_th1_conditions(const OrthoLattice& lat, const std::vector<int>& plus_tab) {
    const int n = lat.size;
    if (static_cast<int>(plus_tab.size()) != n * n)
        throw ParseError("plus table has wrong shape");
    auto plus = [&](int x, int y) { return plus_tab[x * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (plus(x, y) != plus(y, x))
                return Verdict::fail("th1-a", {x, y}, plus(x, y), plus(y, x));
    for (int x = 0; x < n; ++x)
        if (plus(x, lat.one) != lat.comp(x))
            return Verdict::fail("th1-b", {x}, plus(x, lat.one), lat.comp(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (lat.leq(x, lat.comp(y)) && plus(x, y) != lat.join(x, y))
                return Verdict::fail("th1-c", {x, y}, plus(x, y), lat.join(x, y));
    return Verdict::pass("th1-conditions");
}

Verdict check_ortholattice(const OrthoLattice& lat) {
    const int n = lat.size;
    warn_if_large(n);
    for (int x = 0; x < n; ++x) {
        if (lat.meet(x, x) != x)
            return Verdict::fail("ortholattice", {x}, lat.meet(x, x), x, "meet idempotence");
        if (lat.join(x, x) != x)
            return Verdict::fail("ortholattice", {x}, lat.join(x, x), x, "join idempotence");
        if (lat.meet(x, lat.zero) != lat.zero)
            return Verdict::fail("ortholattice", {x}, lat.meet(x, lat.zero), lat.zero,
                                 "x /\\ 0 = 0");
        if (lat.join(x, lat.one) != lat.one)
            return Verdict::fail("ortholattice", {x}, lat.join(x, lat.one), lat.one,
                                 "x v 1 = 1");
        if (lat.meet(x, lat.one) != x)
            return Verdict::fail("ortholattice", {x}, lat.meet(x, lat.one), x, "x /\\ 1 = x");
        if (lat.join(x, lat.zero) != x)
            return Verdict::fail("ortholattice", {x}, lat.join(x, lat.zero), x, "x v 0 = x");
        if (lat.comp(lat.comp(x)) != x)
            return Verdict::fail("ortholattice", {x}, lat.comp(lat.comp(x)), x, "involution");
        if (lat.meet(x, lat.comp(x)) != lat.zero)
            return Verdict::fail("ortholattice", {x}, lat.meet(x, lat.comp(x)), lat.zero,
                                 "x /\\ x' = 0");
        if (lat.join(x, lat.comp(x)) != lat.one)
            return Verdict::fail("ortholattice", {x}, lat.join(x, lat.comp(x)), lat.one,
                                 "x v x' = 1");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (lat.meet(x, y) != lat.meet(y, x))
                return Verdict::fail("ortholattice", {x, y}, lat.meet(x, y), lat.meet(y, x),
                                     "meet commutativity");
            if (lat.join(x, y) != lat.join(y, x))
                return Verdict::fail("ortholattice", {x, y}, lat.join(x, y), lat.join(y, x),
                                     "join commutativity");
            if (lat.meet(x, lat.join(x, y)) != x)
                return Verdict::fail("ortholattice", {x, y}, lat.meet(x, lat.join(x, y)), x,
                                     "absorption");
            if (lat.join(x, lat.meet(x, y)) != x)
                return Verdict::fail("ortholattice", {x, y}, lat.join(x, lat.meet(x, y)), x,
                                     "absorption");
            // De Morgan
            if (lat.comp(lat.meet(x, y)) != lat.join(lat.comp(x), lat.comp(y)))
                return Verdict::fail("ortholattice", {x, y}, lat.comp(lat.meet(x, y)),
                                     lat.join(lat.comp(x), lat.comp(y)), "De Morgan");
            // antitone: x <= y implies y' <= x'
            if (lat.leq(x, y) && !lat.leq(lat.comp(y), lat.comp(x)))
                return Verdict::fail("ortholattice", {x, y}, lat.comp(y), lat.comp(x),
                                     "antitonicity");
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l = lat.meet(lat.meet(x, y), z), r = lat.meet(x, lat.meet(y, z));
                if (l != r)
                    return Verdict::fail("ortholattice", {x, y, z}, l, r, "meet associativity");
                l = lat.join(lat.join(x, y), z);
                r = lat.join(x, lat.join(y, z));
                if (l != r)
                    return Verdict::fail("ortholattice", {x, y, z}, l, r, "join associativity");
            }
    // derived order must be a partial order (antisymmetry via idempotent
    // commutative meet is automatic; transitivity via associativity)
    return Verdict::pass("ortholattice");
}

Verdict check_orthomodular(const OrthoLattice& lat) {
    for (int x = 0; x < lat.size; ++x)
        for (int y = 0; y < lat.size; ++y)
            if (lat.leq(x, y)) {
                int r = lat.join(x, lat.meet(lat.comp(x), y));
                if (r != y) return Verdict::fail("orthomodular", {x, y}, r, y);
            }
    return Verdict::pass("orthomodular");
}

bool commutes_rlse(const RingLikeAlgebra& a, int x, int y) {
    return a.plus(a.times(x, y), a.times(x, a.plus(y, a.one))) == x;
}

int commutator_rlse(const RingLikeAlgebra& a, int x, int y) {
    int x1 = a.plus(x, a.one), y1 = a.plus(y, a.one);
    return a.plus(a.plus(a.times(x, y), a.times(x, y1)),
                  a.plus(a.times(x1, y), a.times(x1, y1)));
}

bool commutes_lattice(const OrthoLattice& lat, int x, int y) {
    return lat.join(lat.meet(x, y), lat.meet(x, lat.comp(y))) == x;
}

int commutator_lattice(const OrthoLattice& lat, int x, int y) {
    int x1 = lat.comp(x), y1 = lat.comp(y);
    return lat.join(lat.join(lat.meet(x, y), lat.meet(x, y1)),
                    lat.join(lat.meet(x1, y), lat.meet(x1, y1)));
}

bool orthogonal_rlse(const RingLikeAlgebra& a, int x, int y) {
    return a.times(x, a.plus(a.one, y)) == x;
}

}  // namespace rlse
