#include "rlse/transforms.hpp"

#include "rlse/errors.hpp"

namespace rlse {

OrthoLattice l_of_r(const RingLikeAlgebra& alg) {
    if (auto v = check_rlse(alg); !v)
        throw NotAnRlse("l_of_r: input fails " + v.law, v);
    OrthoLattice lat;
    lat.size = alg.size;
    lat.zero = alg.zero;
    lat.one = alg.one;
    lat.element_names = alg.element_names;
    lat.meet_tab.resize(alg.size * alg.size);
    lat.join_tab.resize(alg.size * alg.size);
    lat.comp_tab.resize(alg.size);
    for (int x = 0; x < alg.size; ++x) {
        lat.comp_tab[x] = alg.plus(x, alg.one);
        for (int y = 0; y < alg.size; ++y) {
            lat.meet_tab[x * alg.size + y] = alg.times(x, y);
            lat.join_tab[x * alg.size + y] =
                alg.plus(alg.times(alg.plus(x, alg.one), alg.plus(y, alg.one)), alg.one);
        }
    }
    lat.validate();
    if (auto v = check_ortholattice(lat); !v)
        throw InternalInconsistency("l_of_r produced a non-ortholattice at " + v.law);
    if (auto v = check_orthomodular(lat); !v)
        throw InternalInconsistency("l_of_r produced a non-orthomodular lattice");
    return lat;
}

RingLikeAlgebra r_of_l(const OrthoLattice& lat) {
    if (auto v = check_ortholattice(lat); !v)
        throw NotOrthomodular("r_of_l: input fails " + v.law, v);
    if (auto v = check_orthomodular(lat); !v)
        throw NotOrthomodular("r_of_l: input is not orthomodular", v);
    RingLikeAlgebra alg;
    alg.size = lat.size;
    alg.zero = lat.zero;
    alg.one = lat.one;
    alg.element_names = lat.element_names;
    alg.plus_tab.resize(lat.size * lat.size);
    alg.times_tab.resize(lat.size * lat.size);
    for (int x = 0; x < lat.size; ++x)
        for (int y = 0; y < lat.size; ++y) {
            alg.times_tab[x * lat.size + y] = lat.meet(x, y);
            alg.plus_tab[x * lat.size + y] =
                lat.join(lat.meet(x, lat.comp(y)), lat.meet(lat.comp(x), y));
        }
    alg.validate();
    if (auto v = check_rlse(alg); !v)
        throw InternalInconsistency("r_of_l output fails " + v.law);
    if (auto v = check_specific(alg); !v)
        throw InternalInconsistency("r_of_l output is not specific");
    return alg;
}

Verdict check_roundtrips(const RingLikeAlgebra& alg) {
    if (auto v = check_rlse(alg); !v) return v;
    RingLikeAlgebra back = r_of_l(l_of_r(alg));
    if (back.times_tab != alg.times_tab) {
        for (int x = 0; x < alg.size; ++x)
            for (int y = 0; y < alg.size; ++y)
                if (back.times(x, y) != alg.times(x, y))
                    return Verdict::fail("roundtrip-times", {x, y}, back.times(x, y),
                                         alg.times(x, y));
    }
    bool specific = static_cast<bool>(check_specific(alg));
    if (specific) {
        for (int x = 0; x < alg.size; ++x)
            for (int y = 0; y < alg.size; ++y)
                if (back.plus(x, y) != alg.plus(x, y))
                    return Verdict::fail("roundtrip-plus", {x, y}, back.plus(x, y),
                                         alg.plus(x, y), "specific RLSE must roundtrip");
        return Verdict::pass("roundtrip");
    }
    // non-specific: plus must NOT be reproduced
    if (back.plus_tab == alg.plus_tab)
        return Verdict::fail("roundtrip-nonspecific", {}, 0, 0,
                             "plus reproduced although the RLSE is not specific");
    return Verdict::pass("roundtrip");
}

Verdict is_boolean_algebra(const OrthoLattice& lat) {
    for (int x = 0; x < lat.size; ++x)
        for (int y = 0; y < lat.size; ++y)
            for (int z = 0; z < lat.size; ++z) {
                int l = lat.meet(x, lat.join(y, z));
                int r = lat.join(lat.meet(x, y), lat.meet(x, z));
                if (l != r) return Verdict::fail("distributivity", {x, y, z}, l, r);
            }
    return Verdict::pass("boolean-algebra");
}

Verdict check_cor2_pairwise(const RingLikeAlgebra& alg, int a, int b) {
    if (auto v = check_specific(alg); !v)
        throw PreconditionError("check_cor2_pairwise requires a specific RLSE", v);
    bool identity = alg.times(a, alg.plus(b, alg.one)) == alg.plus(alg.times(a, b), a);
    bool commutes = commutes_rlse(alg, a, b);
    if (identity != commutes)
        return Verdict::fail("cor2-pairwise", {a, b}, identity ? 1 : 0, commutes ? 1 : 0,
                             "x(y+1) = xy+x disagrees with commuting");
    return Verdict::pass("cor2-pairwise");
}

}  // namespace rlse
