#include "rlse/events.hpp"

#include <algorithm>
#include <set>

#include "rlse/errors.hpp"

namespace rlse {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

StateSpace StateSpace::make(std::vector<std::string> labels) {
    if (labels.empty()) throw ParseError("state space must be nonempty");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw ParseError("duplicate state labels");
    return StateSpace{std::move(labels)};
}

bool NumericalEvent::two_valued() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Rational& v) { return v == kZero || v == kOne; });
}

NumericalEvent constant_event(int n_states, const Rational& value) {
    return NumericalEvent{std::vector<Rational>(n_states, value)};
}

NumericalEvent complement(const NumericalEvent& p) {
    NumericalEvent out = p;
    for (auto& v : out.values) v = kOne - v;
    return out;
}

namespace {
void require_same_space(const NumericalEvent& p, const NumericalEvent& q) {
    if (p.size() != q.size())
        throw SpaceMismatch("events live over different state spaces");
}
}  // namespace

bool leq(const NumericalEvent& p, const NumericalEvent& q) {
    require_same_space(p, q);
    for (int s = 0; s < p.size(); ++s)
        if (p.values[s] > q.values[s]) return false;
    return true;
}

bool orthogonal(const NumericalEvent& p, const NumericalEvent& q) {
    return leq(p, complement(q));
}

NumericalEvent event_sum(const NumericalEvent& p, const NumericalEvent& q) {
    require_same_space(p, q);
    NumericalEvent out = p;
    for (int s = 0; s < p.size(); ++s) out.values[s] += q.values[s];
    return out;
}

NumericalEvent event_product(const NumericalEvent& p, const NumericalEvent& q) {
    require_same_space(p, q);
    NumericalEvent out = p;
    for (int s = 0; s < p.size(); ++s) out.values[s] *= q.values[s];
    return out;
}

NumericalEvent event_diff(const NumericalEvent& p, const NumericalEvent& q) {
    require_same_space(p, q);
    NumericalEvent out = p;
    for (int s = 0; s < p.size(); ++s) out.values[s] -= q.values[s];
    return out;
}

namespace {
void require_unit(const Rational& a) {
    if (a < kZero || a > kOne) throw OutOfRange("scalar outside [0,1]: " + to_string(a));
}
}  // namespace

Rational oplus_scalar(const Rational& a, const Rational& b) {
    require_unit(a);
    require_unit(b);
    return std::max(a, b) - std::min(a, b);
}

Rational odot_scalar(const Rational& a, const Rational& b) {
    require_unit(a);
    require_unit(b);
    return std::min(a, b);
}

NumericalEvent maxmin_oplus(const NumericalEvent& p, const NumericalEvent& q) {
    require_same_space(p, q);
    NumericalEvent out = p;
    for (int s = 0; s < p.size(); ++s)
        out.values[s] = oplus_scalar(p.values[s], q.values[s]);
    return out;
}

NumericalEvent maxmin_odot(const NumericalEvent& p, const NumericalEvent& q) {
    require_same_space(p, q);
    NumericalEvent out = p;
    for (int s = 0; s < p.size(); ++s)
        out.values[s] = odot_scalar(p.values[s], q.values[s]);
    return out;
}

Lemma2Record check_lemma2_conditions(const Rational& a, const Rational& b) {
    require_unit(a);
    require_unit(b);
    auto op = oplus_scalar;
    auto od = odot_scalar;
    Lemma2Record rec;
    // (i) a(+)b = b(+)a
    rec.holds[0] = op(a, b) == op(b, a);
    // (ii) (a(.)b (+) 1) (.) (a(+)1) (+) 1 = a
    rec.holds[1] = op(od(op(od(a, b), kOne), op(a, kOne)), kOne) == a;
    // (iii) ((a(.)b (+) 1) (.) a (+) 1) (.) a = a(.)b
    rec.holds[2] = od(op(od(op(od(a, b), kOne), a), kOne), a) == od(a, b);
    // (iv) a(.)b (+) (a(+)1) = (a(.)b (+) 1) (.) a (+) 1
    rec.holds[3] = op(od(a, b), op(a, kOne)) == op(od(op(od(a, b), kOne), a), kOne);
    // (v) a(+)b = a(.)(b(+)1) (+) (a(+)1)(.)b
    rec.holds[4] = op(a, b) == op(od(a, op(b, kOne)), od(op(a, kOne), b));
    rec.cond_iii = b >= std::min(a, kOne - a);
    rec.cond_iv = a == kZero || a == kOne || b == kZero;
    rec.consistent = rec.holds[0] && rec.holds[1] && rec.holds[4] &&
                     rec.holds[2] == rec.cond_iii && rec.holds[3] == rec.cond_iv;
    return rec;
}

std::string EventFamily::event_name(int i) const {
    if (i >= 0 && i < static_cast<int>(event_names.size())) return event_names[i];
    return "p" + std::to_string(i);
}

int EventFamily::index_of_name(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (event_name(i) == name) return i;
    return -1;
}

int EventFamily::index_of(const NumericalEvent& e) const {
    for (int i = 0; i < size(); ++i)
        if (events[i] == e) return i;
    return -1;
}

int EventFamily::zero_index() const { return index_of(constant_event(space.size(), kZero)); }
int EventFamily::one_index() const { return index_of(constant_event(space.size(), kOne)); }

int EventFamily::inf_in_family(int i, int j) const {
    std::vector<int> below;
    for (int m = 0; m < size(); ++m)
        if (leq(events[m], events[i]) && leq(events[m], events[j])) below.push_back(m);
    for (int m : below) {
        bool greatest = true;
        for (int c : below)
            if (!leq(events[c], events[m])) { greatest = false; break; }
        if (greatest) return m;
    }
    return -1;
}

int EventFamily::sup_in_family(int i, int j) const {
    std::vector<int> above;
    for (int m = 0; m < size(); ++m)
        if (leq(events[i], events[m]) && leq(events[j], events[m])) above.push_back(m);
    for (int m : above) {
        bool least = true;
        for (int c : above)
            if (!leq(events[m], events[c])) { least = false; break; }
        if (least) return m;
    }
    return -1;
}

EventFamily EventFamily::make(StateSpace space, std::vector<NumericalEvent> events) {
    EventFamily fam;
    fam.space = std::move(space);
    for (const auto& e : events) {
        if (e.size() != fam.space.size())
            throw ParseError("event length does not match state space");
        for (const auto& v : e.values)
            if (v < kZero || v > kOne)
                throw ParseError("event value outside [0,1]: " + to_string(v));
    }
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            if (events[i] == events[j]) throw ParseError("duplicate event in family");
    fam.events = std::move(events);

    const int n = fam.size();
    fam.contains_0_1 = fam.zero_index() >= 0 && fam.one_index() >= 0;
    fam.complement_closed = true;
    for (int i = 0; i < n; ++i)
        if (fam.index_of(complement(fam.events[i])) < 0) fam.complement_closed = false;
    fam.orthosum_closed = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (orthogonal(fam.events[i], fam.events[j]) &&
                fam.index_of(event_sum(fam.events[i], fam.events[j])) < 0)
                fam.orthosum_closed = false;
    fam.triple_sum_closed = true;
    for (int i = 0; i < n && fam.triple_sum_closed; ++i)
        for (int j = 0; j < n && fam.triple_sum_closed; ++j)
            for (int k = 0; k < n; ++k) {
                const auto &p = fam.events[i], &q = fam.events[j], &r = fam.events[k];
                if (orthogonal(p, q) && orthogonal(q, r) && orthogonal(r, p) &&
                    fam.index_of(event_sum(event_sum(p, q), r)) < 0) {
                    fam.triple_sum_closed = false;
                    break;
                }
            }
    fam.lattice_ordered = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (fam.inf_in_family(i, j) < 0 || fam.sup_in_family(i, j) < 0)
                fam.lattice_ordered = false;
    fam.two_valued = std::all_of(fam.events.begin(), fam.events.end(),
                                 [](const NumericalEvent& e) { return e.two_valued(); });
    return fam;
}

Verdict check_s_probability_algebra(const EventFamily& fam) {
    if (fam.zero_index() < 0 || fam.one_index() < 0)
        return Verdict::fail("S1", {}, -1, -1, "constant 0 or 1 missing");
    for (int i = 0; i < fam.size(); ++i)
        if (fam.index_of(complement(fam.events[i])) < 0)
            return Verdict::fail("S2", {i}, -1, -1, "complement of event " +
                                                        std::to_string(i) + " missing");
    const int n = fam.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const auto &p = fam.events[i], &q = fam.events[j], &r = fam.events[k];
                if (orthogonal(p, q) && orthogonal(q, r) && orthogonal(r, p) &&
                    fam.index_of(event_sum(event_sum(p, q), r)) < 0)
                    return Verdict::fail("S3", {i, j, k}, -1, -1,
                                         "orthogonal triple sum not in family");
            }
    return Verdict::pass("s-probability-algebra");
}

Verdict check_gfe(const EventFamily& fam) {
    if (fam.zero_index() < 0 || fam.one_index() < 0)
        return Verdict::fail("S1", {}, -1, -1, "constant 0 or 1 missing");
    for (int i = 0; i < fam.size(); ++i)
        if (fam.index_of(complement(fam.events[i])) < 0)
            return Verdict::fail("S2", {i}, -1, -1, "complement missing");
    for (int i = 0; i < fam.size(); ++i)
        for (int j = 0; j < fam.size(); ++j)
            if (orthogonal(fam.events[i], fam.events[j]) &&
                fam.index_of(event_sum(fam.events[i], fam.events[j])) < 0)
                return Verdict::fail("S3-pairwise", {i, j}, -1, -1,
                                     "orthogonal pair sum not in family");
    return Verdict::pass("gfe");
}

Verdict check_lattice_ordered(const EventFamily& fam) {
    for (int i = 0; i < fam.size(); ++i)
        for (int j = 0; j < fam.size(); ++j) {
            if (fam.inf_in_family(i, j) < 0)
                return Verdict::fail("lattice-ordered", {i, j}, -1, -1, "no infimum in family");
            if (fam.sup_in_family(i, j) < 0)
                return Verdict::fail("lattice-ordered", {i, j}, -1, -1, "no supremum in family");
        }
    return Verdict::pass("lattice-ordered");
}

RingLikeAlgebra rlse_of_events(const EventFamily& fam) {
    if (auto v = check_s_probability_algebra(fam); !v)
        throw PreconditionError("rlse_of_events: family fails " + v.law, v);
    if (auto v = check_lattice_ordered(fam); !v)
        throw PreconditionError("rlse_of_events: family is not lattice ordered", v);
    const int n = fam.size();
    std::vector<int> comp_idx(n);
    for (int i = 0; i < n; ++i) comp_idx[i] = fam.index_of(complement(fam.events[i]));
    RingLikeAlgebra alg;
    alg.size = n;
    alg.zero = fam.zero_index();
    alg.one = fam.one_index();
    alg.plus_tab.resize(n * n);
    alg.times_tab.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            alg.times_tab[i * n + j] = fam.inf_in_family(i, j);
            int left = fam.inf_in_family(i, comp_idx[j]);
            int right = fam.inf_in_family(comp_idx[i], j);
            alg.plus_tab[i * n + j] = fam.sup_in_family(left, right);
        }
    alg.validate();
    if (auto v = check_rlse(alg); !v)
        throw InternalInconsistency("rlse_of_events output fails " + v.law);
    if (auto v = check_specific(alg); !v)
        throw InternalInconsistency("rlse_of_events output is not specific");
    return alg;
}

Verdict check_prop3(const EventFamily& fam) {
    RingLikeAlgebra alg = rlse_of_events(fam);
    const int n = fam.size();
    const int one = alg.one;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto &p = fam.events[i], &q = fam.events[j];
            const auto& oplus = fam.events[alg.plus(i, j)];
            // (i) p(+)q = p(.)(1-q) + (1-p)(.)q
            const auto& l1 = fam.events[alg.times(i, fam.index_of(complement(q)))];
            const auto& l2 = fam.events[alg.times(fam.index_of(complement(p)), j)];
            if (oplus != event_sum(l1, l2))
                return Verdict::fail("prop3-i", {i, j}, alg.plus(i, j), -1,
                                     "p(+)q != p(.)(1-q) + (1-p)(.)q as functions");
            // (ii) p <= q implies p(+)q = q - p
            if (leq(p, q) && oplus != event_diff(q, p))
                return Verdict::fail("prop3-ii", {i, j}, alg.plus(i, j), -1,
                                     "p(+)q != q - p although p <= q");
            // (iv) p _|_ q implies p(+)q = p + q
            if (orthogonal(p, q) && oplus != event_sum(p, q))
                return Verdict::fail("prop3-iv", {i, j}, alg.plus(i, j), -1,
                                     "p(+)q != p + q although p _|_ q");
        }
    // (iii) p(+)1 = 1 - p
    for (int i = 0; i < n; ++i)
        if (fam.events[alg.plus(i, one)] != complement(fam.events[i]))
            return Verdict::fail("prop3-iii", {i}, alg.plus(i, one), -1, "p(+)1 != 1-p");
    return Verdict::pass("prop3");
}

Verdict lemma1_check(const NumericalEvent& p, const NumericalEvent& q) {
    if (!p.two_valued() || !q.two_valued())
        throw NotTwoValued("lemma1_check requires two-valued events");
    require_same_space(p, q);
    const auto pq = event_product(p, q);
    const auto oplus = maxmin_oplus(p, q);
    const auto odot = maxmin_odot(p, q);
    for (int s = 0; s < p.size(); ++s) {
        Rational expect = p.values[s] + q.values[s] - Rational(2) * pq.values[s];
        if (oplus.values[s] != expect)
            return Verdict::fail("lemma1-oplus", {s}, -1, -1, "p(+)q != p+q-2pq at state " +
                                                                  std::to_string(s));
        if (odot.values[s] != pq.values[s])
            return Verdict::fail("lemma1-odot", {s}, -1, -1, "p(.)q != pq at state " +
                                                                 std::to_string(s));
    }
    return Verdict::pass("lemma1");
}

namespace {

// The max-min algebra of a closed family; throws NotClosed on a missing
// result.
RingLikeAlgebra maxmin_algebra(const EventFamily& fam) {
    const int n = fam.size();
    RingLikeAlgebra alg;
    alg.size = n;
    alg.zero = fam.zero_index();
    alg.one = fam.one_index();
    if (alg.zero < 0 || alg.one < 0)
        throw PreconditionError("family must contain the constants 0 and 1");
    alg.plus_tab.resize(n * n);
    alg.times_tab.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = fam.index_of(maxmin_oplus(fam.events[i], fam.events[j]));
            if (s < 0) throw NotClosed("family not closed under (+)", i, j, "oplus");
            int m = fam.index_of(maxmin_odot(fam.events[i], fam.events[j]));
            if (m < 0) throw NotClosed("family not closed under (.)", i, j, "odot");
            alg.plus_tab[i * n + j] = s;
            alg.times_tab[i * n + j] = m;
        }
    alg.validate();
    return alg;
}

}  // namespace

QStructureReport check_q_structure(const EventFamily& fam) {
    RingLikeAlgebra alg = maxmin_algebra(fam);
    QStructureReport rep;
    rep.near_rlse = check_near_rlse(alg);
    rep.specific = check_specific(alg);
    rep.gfe = check_gfe(fam);
    rep.two_valued = fam.two_valued;
    rep.r3_verdict = check_identity_r3(alg);
    rep.r4_verdict = check_identity_r4(alg);
    rep.r3 = rep.r3_verdict.passed;
    rep.r4 = rep.r4_verdict.passed;
    rep.rlse = check_rlse(alg).passed;
    rep.boolean_ring = check_boolean_ring(alg).passed;
    bool all = rep.two_valued && rep.r3 && rep.r4 && rep.rlse && rep.boolean_ring;
    bool none = !rep.two_valued && !rep.r3 && !rep.r4 && !rep.rlse && !rep.boolean_ring;
    rep.equivalent = all || none;
    rep.passed = rep.near_rlse.passed && rep.specific.passed && rep.gfe.passed &&
                 rep.equivalent;
    return rep;
}

Verdict check_q_structure_verdict(const EventFamily& fam) {
    QStructureReport rep = check_q_structure(fam);
    if (rep.passed) return Verdict::pass("q-structure");
    if (!rep.near_rlse.passed) return rep.near_rlse;
    if (!rep.specific.passed) return rep.specific;
    if (!rep.gfe.passed) return rep.gfe;
    return Verdict::fail("q-structure-equivalence", {}, -1, -1,
                         "conditions (a)-(e) are not all-true or all-false");
}

EventFamily close_under_maxmin(const EventFamily& fam, int max_size) {
    std::vector<NumericalEvent> pool = fam.events;
    auto contains = [&](const NumericalEvent& e) {
        return std::find(pool.begin(), pool.end(), e) != pool.end();
    };
    if (!contains(constant_event(fam.space.size(), kZero)))
        pool.push_back(constant_event(fam.space.size(), kZero));
    if (!contains(constant_event(fam.space.size(), kOne)))
        pool.push_back(constant_event(fam.space.size(), kOne));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            for (const auto& e : {maxmin_oplus(pool[i], pool[j]),
                                  maxmin_odot(pool[i], pool[j])}) {
                if (!contains(e)) {
                    if (static_cast<int>(pool.size()) >= max_size)
                        throw TooLarge("max-min closure exceeds cap of " +
                                       std::to_string(max_size));
                    pool.push_back(e);
                }
            }
        }
    return EventFamily::make(fam.space, std::move(pool));
}

}  // namespace rlse
