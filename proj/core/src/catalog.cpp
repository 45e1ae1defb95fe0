#include "rlse/catalog.hpp"

#include <string>

#include "rlse/errors.hpp"
#include "rlse/transforms.hpp"

namespace rlse {

RingLikeAlgebra boolean_ring(int n_atoms) {
    if (n_atoms < 1 || n_atoms > 4)
        throw InvalidIndex("boolean_ring supports 1..4 atoms");
    const int n = 1 << n_atoms;
    RingLikeAlgebra alg;
    alg.size = n;
    alg.zero = 0;
    alg.one = n - 1;
    alg.plus_tab.resize(n * n);
    alg.times_tab.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            alg.plus_tab[x * n + y] = x ^ y;
            alg.times_tab[x * n + y] = x & y;
        }
    alg.element_names.reserve(n);
    for (int x = 0; x < n; ++x) {
        std::string name = "{";
        for (int b = 0; b < n_atoms; ++b)
            if (x & (1 << b)) name += std::to_string(b + 1) + ",";
        if (name.size() > 1) name.pop_back();
        name += "}";
        alg.element_names.push_back(name);
    }
    return alg;
}

OrthoLattice mo_lattice(int n) {
    if (n < 1) throw InvalidIndex("mo_lattice needs n >= 1");
    const int size = 2 * n + 2;
    OrthoLattice lat;
    lat.size = size;
    lat.zero = 0;
    lat.one = size - 1;
    lat.meet_tab.assign(size * size, 0);
    lat.join_tab.assign(size * size, lat.one);
    lat.comp_tab.resize(size);
    lat.comp_tab[lat.zero] = lat.one;
    lat.comp_tab[lat.one] = lat.zero;
    for (int i = 1; i <= n; ++i) {
        lat.comp_tab[2 * i - 1] = 2 * i;
        lat.comp_tab[2 * i] = 2 * i - 1;
    }
    auto meet = [&](int x, int y) -> int {
        if (x == y) return x;
        if (x == lat.zero || y == lat.zero) return lat.zero;
        if (x == lat.one) return y;
        if (y == lat.one) return x;
        return lat.zero;  // distinct middle elements
    };
    auto join = [&](int x, int y) -> int {
        if (x == y) return x;
        if (x == lat.one || y == lat.one) return lat.one;
        if (x == lat.zero) return y;
        if (y == lat.zero) return x;
        return lat.one;
    };
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            lat.meet_tab[x * size + y] = meet(x, y);
            lat.join_tab[x * size + y] = join(x, y);
        }
    lat.element_names.push_back("0");
    for (int i = 1; i <= n; ++i) {
        lat.element_names.push_back("a" + std::to_string(i));
        lat.element_names.push_back("a" + std::to_string(i) + "'");
    }
    lat.element_names.push_back("1");
    return lat;
}

RingLikeAlgebra specific_rlse_mo(int n) { return r_of_l(mo_lattice(n)); }

RingLikeAlgebra weakly_associative_mo2(int c) {
    OrthoLattice lat = mo_lattice(2);
    if (c < 0 || c >= lat.size) throw InvalidIndex("c must be an MO2 index");
    // indices: 0, a=1, a'=2, b=3, b'=4, 1=5
    RingLikeAlgebra alg;
    alg.size = lat.size;
    alg.zero = lat.zero;
    alg.one = lat.one;
    alg.element_names = lat.element_names;
    alg.times_tab = lat.meet_tab;
    alg.plus_tab.assign(lat.size * lat.size, -1);
    auto set_plus = [&](int x, int y, int v) {
        alg.plus_tab[x * lat.size + y] = v;
        alg.plus_tab[y * lat.size + x] = v;
    };
    // forced cells: x+y = x v y if x <= y' (covers x = 0 and complement
    // pairs), x+1 = x', x+x = 0 (characteristic 2)
    for (int x = 0; x < lat.size; ++x) {
        set_plus(x, lat.one, lat.comp(x));
        set_plus(x, x, lat.zero);
        for (int y = 0; y < lat.size; ++y)
            if (x != y && lat.leq(x, lat.comp(y))) set_plus(x, y, lat.join(x, y));
    }
    const int cc = lat.comp(c);
    set_plus(1, 3, c);
    set_plus(2, 4, c);
    set_plus(1, 4, cc);
    set_plus(2, 3, cc);
    alg.validate();
    return alg;
}

EventFamily concrete_mo2_events() {
    auto ev = [&](std::initializer_list<int> bits) {
        NumericalEvent e;
        e.values.assign(4, Rational(0));
        for (int b : bits) e.values[b - 1] = Rational(1);
        return e;
    };
    StateSpace space = StateSpace::make({"1", "2", "3", "4"});
    // order matches specific_rlse_mo(2): 0, a, a', b, b', 1
    std::vector<NumericalEvent> events = {ev({}),     ev({1, 2}), ev({3, 4}),
                                          ev({1, 3}), ev({2, 4}), ev({1, 2, 3, 4})};
    return EventFamily::make(std::move(space), std::move(events));
}

std::vector<std::pair<int, int>> free_plus_cells(const OrthoLattice& lat) {
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < lat.size; ++x)
        for (int y = x; y < lat.size; ++y) {
            if (x == lat.one || y == lat.one) continue;       // forced by x+1 = x'
            if (lat.leq(x, lat.comp(y))) continue;            // forced by condition (c)
            cells.emplace_back(x, y);
        }
    return cells;
}

void for_each_plus_extension(const OrthoLattice& lat,
                             const std::function<bool(const RingLikeAlgebra&)>& fn) {
    if (lat.size > 8) throw TooLarge("plus-extension enumeration capped at 8 elements");
    if (auto v = check_ortholattice(lat); !v)
        throw NotOrthomodular("enumeration requires an ortholattice", v);
    if (auto v = check_orthomodular(lat); !v)
        throw NotOrthomodular("enumeration requires an orthomodular lattice", v);
    const auto cells = free_plus_cells(lat);
    RingLikeAlgebra base;
    base.size = lat.size;
    base.zero = lat.zero;
    base.one = lat.one;
    base.element_names = lat.element_names;
    base.times_tab = lat.meet_tab;
    base.plus_tab.assign(lat.size * lat.size, 0);
    for (int x = 0; x < lat.size; ++x)
        for (int y = 0; y < lat.size; ++y) {
            if (x == lat.one)
                base.plus_tab[x * lat.size + y] = lat.comp(y);
            else if (y == lat.one)
                base.plus_tab[x * lat.size + y] = lat.comp(x);
            else if (lat.leq(x, lat.comp(y)))
                base.plus_tab[x * lat.size + y] = lat.join(x, y);
        }
    // odometer over the free cells, last cell fastest
    std::vector<int> values(cells.size(), 0);
    while (true) {
        RingLikeAlgebra alg = base;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto [x, y] = cells[i];
            alg.plus_tab[x * lat.size + y] = values[i];
            alg.plus_tab[y * lat.size + x] = values[i];
        }
        if (!fn(alg)) return;
        int pos = static_cast<int>(cells.size()) - 1;
        while (pos >= 0 && values[pos] == lat.size - 1) values[pos--] = 0;
        if (pos < 0) return;
        ++values[pos];
    }
}

std::vector<RingLikeAlgebra> enumerate_plus_extensions(const OrthoLattice& lat,
                                                       std::size_t limit) {
    std::vector<RingLikeAlgebra> out;
    for_each_plus_extension(lat, [&](const RingLikeAlgebra& alg) {
        if (out.size() >= limit) return false;
        if (auto v = check_rlse(alg); !v)
            throw InternalInconsistency("enumerated plus extension fails " + v.law);
        out.push_back(alg);
        return out.size() < limit;
    });
    return out;
}

OrthoLattice benzene_o6() {
    // 0 < a < b < 1 and 0 < b' < a' < 1; the two chains only meet at 0 and 1
    const int n = 6;
    enum { O = 0, A = 1, B = 2, Bp = 3, Ap = 4, I = 5 };
    OrthoLattice lat;
    lat.size = n;
    lat.zero = O;
    lat.one = I;
    lat.comp_tab = {I, Ap, Bp, B, A, O};
    lat.element_names = {"0", "a", "b", "b'", "a'", "1"};
    std::vector<char> le(n * n, 0);
    auto set_le = [&](int x, int y) { le[x * n + y] = 1; };
    for (int x = 0; x < n; ++x) {
        set_le(O, x);
        set_le(x, I);
        set_le(x, x);
    }
    set_le(A, B);
    set_le(Bp, Ap);
    auto below = [&](int x, int y) { return le[x * n + y] != 0; };
    lat.meet_tab.resize(n * n);
    lat.join_tab.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int m = O, j = I;
            for (int z = 0; z < n; ++z) {
                if (below(z, x) && below(z, y) && below(m, z)) m = z;
                if (below(x, z) && below(y, z) && below(z, j)) j = z;
            }
            lat.meet_tab[x * n + y] = m;
            lat.join_tab[x * n + y] = j;
        }
    return lat;
}

}  // namespace rlse
