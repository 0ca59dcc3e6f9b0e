#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetfr/group_space.hpp"
#include "posetfr/poset.hpp"
#include "posetfr/rings.hpp"

namespace posetfr {

// Univariate polynomial over a ring context R, ascending coefficients,
// normalized (no trailing ring-zero entries). deg(0) is -1 here.
template <class R>
struct RingPoly {
    std::vector<typename R::Elem> c;
    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
};

template <class R>
void poly_normalize(const R& ring, RingPoly<R>& p) {
    while (!p.c.empty() && ring.is_zero(p.c.back())) p.c.pop_back();
}

template <class R>
RingPoly<R> poly_const(const R& ring, typename R::Elem v) {
    RingPoly<R> p;
    if (!ring.is_zero(v)) p.c.push_back(std::move(v));
    return p;
}

template <class R>
bool poly_eq(const R& ring, const RingPoly<R>& a, const RingPoly<R>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!ring.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class R>
RingPoly<R> poly_add(const R& ring, const RingPoly<R>& a, const RingPoly<R>& b) {
    RingPoly<R> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), ring.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = ring.add(r.c[i], b.c[i]);
    poly_normalize(ring, r);
    return r;
}

template <class R>
RingPoly<R> poly_sub(const R& ring, const RingPoly<R>& a, const RingPoly<R>& b) {
    RingPoly<R> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), ring.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = ring.sub(r.c[i], b.c[i]);
    poly_normalize(ring, r);
    return r;
}

template <class R>
RingPoly<R> poly_mul(const R& ring, const RingPoly<R>& a, const RingPoly<R>& b) {
    RingPoly<R> r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = ring.add(r.c[i + j], ring.mul(a.c[i], b.c[j]));
    poly_normalize(ring, r);
    return r;
}

// coeff * x^shift * p
template <class R>
RingPoly<R> poly_monomial_mul(const R& ring, const RingPoly<R>& p, const typename R::Elem& coeff,
                              int shift) {
    RingPoly<R> r;
    if (p.c.empty() || ring.is_zero(coeff)) return r;
    r.c.assign(p.c.size() + static_cast<std::size_t>(shift), ring.zero());
    for (std::size_t i = 0; i < p.c.size(); ++i)
        r.c[i + static_cast<std::size_t>(shift)] = ring.mul(coeff, p.c[i]);
    poly_normalize(ring, r);
    return r;
}

template <class R>
RingPoly<R> poly_pow(const R& ring, const RingPoly<R>& p, int e) {
    RingPoly<R> r = poly_const(ring, ring.one());
    for (int i = 0; i < e; ++i) r = poly_mul(ring, r, p);
    return r;
}

template <class R>
std::string poly_str(const R& ring, const RingPoly<R>& p) {
    if (p.c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (i) s += " + ";
        s += "(" + ring.str(p.c[i]) + ")";
        if (i) s += "*x^" + std::to_string(i);
    }
    return s;
}

// Per-element parameters tau, eta together with the side conditions various
// results need; the flags are recomputed here, never taken on trust.
template <class R>
struct PiParams {
    std::vector<typename R::Elem> tau, eta;
    bool tau_all_nonzero = false;
    bool eta_all_nonzero = false;
    bool eta_all_not_minus_one = false;
    bool eta_shift_of_tau = false;  // eta_i == tau_i - 1 for all i
    bool positive_side = false;     // ordered only: tau_i > 0, eta_i > -1, eta_i != 0
};

template <class R>
PiParams<R> make_pi_params(const R& ring, std::vector<typename R::Elem> tau,
                           std::vector<typename R::Elem> eta) {
    require(tau.size() == eta.size(), Errc::bad_instance, "tau and eta lengths differ");
    PiParams<R> p;
    p.tau = std::move(tau);
    p.eta = std::move(eta);
    p.tau_all_nonzero = p.eta_all_nonzero = p.eta_all_not_minus_one = p.eta_shift_of_tau = true;
    p.positive_side = R::is_ordered;
    const auto minus_one = ring.neg(ring.one());
    for (std::size_t i = 0; i < p.tau.size(); ++i) {
        p.tau_all_nonzero = p.tau_all_nonzero && !ring.is_zero(p.tau[i]);
        p.eta_all_nonzero = p.eta_all_nonzero && !ring.is_zero(p.eta[i]);
        p.eta_all_not_minus_one = p.eta_all_not_minus_one && !ring.eq(p.eta[i], minus_one);
        p.eta_shift_of_tau =
            p.eta_shift_of_tau && ring.eq(p.eta[i], ring.sub(p.tau[i], ring.one()));
        if constexpr (R::is_ordered) {
            p.positive_side = p.positive_side && ring.cmp(p.tau[i], ring.zero()) > 0 &&
                              ring.cmp(p.eta[i], minus_one) > 0 && !ring.is_zero(p.eta[i]);
        } else {
            p.positive_side = false;
        }
    }
    return p;
}

// tau_i = h_i, eta_i = h_i - 1: the instantiation that turns pi(Omega, D)
// into the weight-enumerator polynomial F.
template <class R>
PiParams<R> params_from_orders(const R& ring, const AmbientSpace& space) {
    std::vector<typename R::Elem> tau, eta;
    for (int i = 0; i < space.n(); ++i) {
        const auto h = static_cast<long>(space.coordinate_order(i));
        tau.push_back(ring.from_int(h));
        eta.push_back(ring.from_int(h - 1));
    }
    return make_pi_params(ring, std::move(tau), std::move(eta));
}

// One indeterminate pair (t_i, e_i) per poset element; identities verified
// over this ring hold for every parameter assignment in every commutative
// ring.
inline SymbolicRing symbolic_ring_for(const Poset& poset) {
    std::vector<std::string> names;
    for (int i = 0; i < poset.size(); ++i) {
        names.push_back("t_" + poset.name(i));
        names.push_back("e_" + poset.name(i));
    }
    return SymbolicRing(std::move(names));
}

inline PiParams<SymbolicRing> symbolic_params(const SymbolicRing& ring) {
    std::vector<MultiPoly> tau, eta;
    for (std::size_t i = 0; 2 * i + 1 < ring.arity(); ++i) {
        tau.push_back(ring.variable(2 * i));
        eta.push_back(ring.variable(2 * i + 1));
    }
    return make_pi_params(ring, std::move(tau), std::move(eta));
}

// eta_i substituted by t_i - 1, for identities stated under that relation.
inline PiParams<SymbolicRing> symbolic_params_shifted(const SymbolicRing& ring) {
    std::vector<MultiPoly> tau, eta;
    for (std::size_t i = 0; 2 * i + 1 < ring.arity(); ++i) {
        tau.push_back(ring.variable(2 * i));
        eta.push_back(ring.sub(tau.back(), ring.one()));
    }
    return make_pi_params(ring, std::move(tau), std::move(eta));
}

// phi(D, I): zero unless I cap D lies inside max(I); otherwise the signed
// product of tau below the maximal layer and eta on the maximal layer off D.
template <class R>
typename R::Elem phi(const Poset& poset, const R& ring, const PiParams<R>& params,
                     const ElementSet& d, const ElementSet& ideal) {
    poset.check(d);
    poset.check(ideal);
    const ElementSet mx = poset.maximal(ideal);
    const std::uint64_t meet = ideal.bits & d.bits;
    if ((meet & ~mx.bits) != 0) return ring.zero();
    auto v = ring.one();
    for_each_element(ideal.bits & ~mx.bits,
                     [&](int i) { v = ring.mul(v, params.tau[static_cast<std::size_t>(i)]); });
    for_each_element(mx.bits & ~d.bits,
                     [&](int i) { v = ring.mul(v, params.eta[static_cast<std::size_t>(i)]); });
    return (std::popcount(meet) % 2 == 0) ? v : ring.neg(v);
}

// pi(Y, D) = sum over ideals I of the subposet induced on Y of phi(D,I) x^|I|.
template <class R>
RingPoly<R> pi_direct(const Poset& poset, const R& ring, const PiParams<R>& params,
                      const ElementSet& y, const ElementSet& d) {
    require(d.subset_of(y), Errc::not_subset, "pi(Y,D) requires D inside Y");
    RingPoly<R> f;
    f.c.assign(static_cast<std::size_t>(y.size()) + 1, ring.zero());
    for (const ElementSet& ideal : poset.ideals(y)) {
        const auto v = phi(poset, ring, params, d, ideal);
        auto& slot = f.c[static_cast<std::size_t>(ideal.size())];
        slot = ring.add(slot, v);
    }
    poly_normalize(ring, f);
    return f;
}

// pi(X, D) for an up-closed D computed through the carrier reduction
// Y = min(D) cup (X - D); agrees with pi_direct(X, D).
template <class R>
RingPoly<R> pi_reduced(const Poset& poset, const R& ring, const PiParams<R>& params,
                       const ElementSet& x, const ElementSet& d) {
    require(poset.is_up_closed_in(x, d), Errc::not_up_closed,
            "pi reduction requires D up-closed in X");
    const ElementSet mind = poset.minimal(d);
    const ElementSet y = poset.set_from_mask(mind.bits | (x.bits & ~d.bits));
    require(mind.subset_of(poset.maximal(y)), Errc::internal,
            "reduction invariant min(D) inside max(Y) failed");
    return pi_direct(poset, ring, params, y, mind);
}

// Difference identity for removing a maximal element e of Y: the difference
// pi(Y,D) - pi(Y-{e}, D-{e}) collapses to a single shifted pi over
// Y - <{e}>_Y, with three shapes depending on where e sits relative to D.
template <class R>
bool check_peel_identity(const Poset& poset, const R& ring, const PiParams<R>& params,
                         const ElementSet& y, const ElementSet& d, int e) {
    require(poset.is_up_closed_in(y, d), Errc::precondition, "D must be up-closed in Y");
    require(poset.maximal(y).contains(e), Errc::precondition, "e must be maximal in Y");
    const ElementSet u = poset.closure_in(y, poset.set_from_mask(1ull << e));
    const ElementSet y_less_e = poset.set_from_mask(y.bits & ~(1ull << e));
    const ElementSet d_less_e = poset.set_from_mask(d.bits & ~(1ull << e));
    const ElementSet y_less_u = poset.set_from_mask(y.bits & ~u.bits);

    const RingPoly<R> lhs = poly_sub(ring, pi_direct(poset, ring, params, y, d),
                                     pi_direct(poset, ring, params, y_less_e, d_less_e));

    auto tau_below_e = [&] {
        auto v = ring.one();
        for_each_element(u.bits & ~(1ull << e),
                         [&](int i) { v = ring.mul(v, params.tau[static_cast<std::size_t>(i)]); });
        return v;
    };
    RingPoly<R> rhs;
    if (!d.contains(e)) {
        const auto coeff = ring.mul(params.eta[static_cast<std::size_t>(e)], tau_below_e());
        rhs = poly_monomial_mul(ring, pi_direct(poset, ring, params, y_less_u, d), coeff,
                                u.size());
    } else if (poset.minimal(d).contains(e)) {
        const auto coeff = ring.neg(tau_below_e());
        rhs = poly_monomial_mul(ring, pi_direct(poset, ring, params, y_less_u, d_less_e), coeff,
                                u.size());
    } else {
        // e in D - min(D): the two polynomials coincide.
    }
    return poly_eq(ring, lhs, rhs);
}

// Augmentation identity: pi(Y,L) - pi(Y, L + {e}) for maximal e outside L.
template <class R>
bool check_augment_identity(const Poset& poset, const R& ring, const PiParams<R>& params,
                            const ElementSet& y, const ElementSet& l, int e) {
    require(poset.is_up_closed_in(y, l), Errc::precondition, "L must be up-closed in Y");
    require(poset.maximal(y).contains(e) && !l.contains(e), Errc::precondition,
            "e must be maximal in Y and outside L");
    const ElementSet u = poset.closure_in(y, poset.set_from_mask(1ull << e));
    const ElementSet y_less_u = poset.set_from_mask(y.bits & ~u.bits);
    const ElementSet l_plus_e = poset.set_from_mask(l.bits | (1ull << e));

    const RingPoly<R> lhs = poly_sub(ring, pi_direct(poset, ring, params, y, l),
                                     pi_direct(poset, ring, params, y, l_plus_e));
    auto coeff = ring.add(params.eta[static_cast<std::size_t>(e)], ring.one());
    for_each_element(u.bits & ~(1ull << e), [&](int i) {
        coeff = ring.mul(coeff, params.tau[static_cast<std::size_t>(i)]);
    });
    const RingPoly<R> rhs =
        poly_monomial_mul(ring, pi_direct(poset, ring, params, y_less_u, l), coeff, u.size());
    return poly_eq(ring, lhs, rhs);
}

namespace detail {

template <class R>
typename R::Elem tau_product(const R& ring, const PiParams<R>& params, std::uint64_t mask) {
    auto v = ring.one();
    for_each_element(mask,
                     [&](int i) { v = ring.mul(v, params.tau[static_cast<std::size_t>(i)]); });
    return v;
}

template <class F>
void for_each_submask(std::uint64_t mask, F&& fn) {
    std::uint64_t sub = mask;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

}  // namespace detail

// Both inclusion-exclusion identities for D inside max(Y), under the side
// condition eta_i = tau_i - 1.
template <class R>
std::pair<bool, bool> check_inclusion_exclusion(const Poset& poset, const R& ring,
                                                const PiParams<R>& params, const ElementSet& y,
                                                const ElementSet& d) {
    require(params.eta_shift_of_tau, Errc::shift_required,
            "identity requires eta_i = tau_i - 1 for all i");
    require(d.subset_of(poset.maximal(y)), Errc::precondition, "D must lie inside max(Y)");

    RingPoly<R> sum1, sum2;
    detail::for_each_submask(d.bits, [&](std::uint64_t a_bits) {
        const ElementSet a = poset.set_from_mask(a_bits);
        const ElementSet ca = poset.closure_in(y, a);
        const ElementSet rest = poset.set_from_mask(y.bits & ~ca.bits);
        auto coeff = detail::tau_product(ring, params, ca.bits);
        if (std::popcount(a_bits) % 2 != 0) coeff = ring.neg(coeff);
        sum1 = poly_add(ring, sum1,
                        poly_monomial_mul(
                            ring, pi_direct(poset, ring, params, rest, poset.empty_set()), coeff,
                            ca.size()));
        RingPoly<R> term2 = pi_direct(poset, ring, params, y, a);
        if (std::popcount(a_bits) % 2 != 0)
            term2 = poly_monomial_mul(ring, term2, ring.neg(ring.one()), 0);
        sum2 = poly_add(ring, sum2, term2);
    });
    const bool first = poly_eq(ring, pi_direct(poset, ring, params, y, d), sum1);
    const ElementSet cd = poset.closure_in(y, d);
    const RingPoly<R> lhs2 = poly_monomial_mul(
        ring,
        pi_direct(poset, ring, params, poset.set_from_mask(y.bits & ~cd.bits),
                  poset.empty_set()),
        detail::tau_product(ring, params, cd.bits), cd.size());
    const bool second = poly_eq(ring, lhs2, sum2);
    return {first, second};
}

// The reduced inclusion-exclusion form for an arbitrary up-closed D in X.
template <class R>
bool check_reduced_inclusion_exclusion(const Poset& poset, const R& ring,
                                       const PiParams<R>& params, const ElementSet& x,
                                       const ElementSet& d) {
    require(params.eta_shift_of_tau, Errc::shift_required,
            "identity requires eta_i = tau_i - 1 for all i");
    require(poset.is_up_closed_in(x, d), Errc::not_up_closed, "D must be up-closed in X");
    const ElementSet mind = poset.minimal(d);
    RingPoly<R> sum;
    detail::for_each_submask(mind.bits, [&](std::uint64_t a_bits) {
        const ElementSet a = poset.set_from_mask(a_bits);
        const ElementSet ca = poset.closure_in(x, a);
        const ElementSet rest = poset.set_from_mask((x.bits & ~ca.bits) & ~(d.bits & ~mind.bits));
        auto coeff = detail::tau_product(ring, params, ca.bits);
        if (std::popcount(a_bits) % 2 != 0) coeff = ring.neg(coeff);
        sum = poly_add(ring, sum,
                       poly_monomial_mul(
                           ring, pi_direct(poset, ring, params, rest, poset.empty_set()), coeff,
                           ca.size()));
    });
    return poly_eq(ring, pi_direct(poset, ring, params, x, d), sum);
}

// Degree and leading coefficient of pi(X, D) over a field with nonzero
// parameters, from the formulas alone; cross-checked against pi_direct.
template <class R>
std::pair<int, typename R::Elem> degree_leading(const Poset& poset, const R& ring,
                                                const PiParams<R>& params, const ElementSet& x,
                                                const ElementSet& d) {
    if constexpr (!R::is_field) fail(Errc::not_a_field, "degree formula requires a field");
    require(params.tau_all_nonzero && params.eta_all_nonzero, Errc::zero_parameter,
            "degree formula requires nonzero tau and eta");
    require(poset.is_up_closed_in(x, d), Errc::not_up_closed, "D must be up-closed in X");
    const ElementSet mind = poset.minimal(d);
    const ElementSet y = poset.set_from_mask(mind.bits | (x.bits & ~d.bits));
    const int degree = x.size() - d.size() + mind.size();
    const auto lead = phi(poset, ring, params, mind, y);

    const RingPoly<R> direct = pi_direct(poset, ring, params, x, d);
    require(direct.degree() == degree && !direct.c.empty() && ring.eq(direct.c.back(), lead),
            Errc::internal, "degree/leading formula disagrees with the direct sum");
    return {degree, lead};
}

// Closed form of pi(Omega, D) for a hierarchical poset and a nonempty up-set
// D, assembled level by level.
template <class R>
RingPoly<R> hierarchical_closed_form(const Poset& poset, const R& ring,
                                     const PiParams<R>& params, const ElementSet& d) {
    require(poset.is_hierarchical(), Errc::not_hierarchical,
            "closed form applies to hierarchical posets");
    require(!d.empty(), Errc::empty_upset, "closed form requires a nonempty up-set");
    require(poset.is_up_set(d), Errc::not_a_dual_ideal, "D must be an ideal of the dual poset");

    const int r = poset.sigma(d);
    auto linear = [&](int i) {  // 1 + eta_i x
        RingPoly<R> p;
        p.c = {ring.one(), params.eta[static_cast<std::size_t>(i)]};
        poly_normalize(ring, p);
        return p;
    };
    RingPoly<R> one_minus_x;
    one_minus_x.c = {ring.one(), ring.neg(ring.one())};

    std::uint64_t prefix = 0;  // union of levels below the current one
    RingPoly<R> acc = poly_const(ring, ring.one());
    for (int t = 1; t < r; ++t) {
        RingPoly<R> prod = poly_const(ring, ring.one());
        for_each_element(poset.level(t - 1).bits,
                         [&](int i) { prod = poly_mul(ring, prod, linear(i)); });
        prod = poly_sub(ring, prod, poly_const(ring, ring.one()));
        acc = poly_add(ring, acc,
                       poly_monomial_mul(ring, prod, detail::tau_product(ring, params, prefix),
                                         std::popcount(prefix)));
        prefix |= poset.level(t - 1).bits;
    }
    const std::uint64_t wr = poset.level(r - 1).bits;
    RingPoly<R> top = poly_pow(ring, one_minus_x, std::popcount(wr & d.bits));
    for_each_element(wr & ~d.bits, [&](int i) { top = poly_mul(ring, top, linear(i)); });
    top = poly_sub(ring, top, poly_const(ring, ring.one()));
    acc = poly_add(ring, acc,
                   poly_monomial_mul(ring, top, detail::tau_product(ring, params, prefix),
                                     std::popcount(prefix)));
    return acc;
}

// Total order on polynomials over an ordered ring: equality, then lower
// degree, then the smaller coefficient at the first index where they differ.
template <class R>
bool poly_order_leq(const R& ring, const RingPoly<R>& f, const RingPoly<R>& g) {
    static_assert(R::is_ordered, "the polynomial order needs ordered coefficients");
    if (f.c.size() != g.c.size()) return f.c.size() < g.c.size();
    for (std::size_t k = 0; k < f.c.size(); ++k)
        if (!ring.eq(f.c[k], g.c[k])) return ring.cmp(f.c[k], g.c[k]) < 0;
    return true;  // equal
}

// Strict comparison pi(X,D) below pi(X,A) for up-closed A strictly inside D,
// under the positivity side conditions.
template <class R>
bool check_strict_order(const Poset& poset, const R& ring, const PiParams<R>& params,
                        const ElementSet& x, const ElementSet& a, const ElementSet& d) {
    static_assert(R::is_ordered, "the polynomial order needs ordered coefficients");
    require(params.positive_side, Errc::positivity_required,
            "requires tau_i > 0, eta_i > -1, eta_i != 0");
    require(poset.is_up_closed_in(x, a) && poset.is_up_closed_in(x, d), Errc::not_up_closed,
            "A and D must be up-closed in X");
    require(a.subset_of(d) && a.bits != d.bits, Errc::not_proper_subset,
            "A must be a proper subset of D");
    const RingPoly<R> fd = pi_direct(poset, ring, params, x, d);
    const RingPoly<R> fa = pi_direct(poset, ring, params, x, a);
    return !poly_eq(ring, fd, fa) && poly_order_leq(ring, fd, fa);
}

template <class R>
struct UpsetPolynomials {
    std::vector<ElementSet> upsets;       // every ideal of the dual poset
    std::vector<RingPoly<R>> polys;       // pi(Omega, M), aligned with upsets
    std::vector<RingPoly<R>> distinct;    // deduplicated, first-seen order
    std::size_t count() const noexcept { return distinct.size(); }
};

// The set {pi(Omega, M) : M an up-set}; its cardinality is at least n+1 and
// equals n+1 exactly in the hierarchical, level-uniform-eta case.
template <class R>
UpsetPolynomials<R> upset_polynomials(const Poset& poset, const R& ring,
                                      const PiParams<R>& params) {
    static_assert(R::is_ordered, "the cardinality bound relies on the polynomial order");
    require(params.positive_side, Errc::positivity_required,
            "requires tau_i > 0, eta_i > -1, eta_i != 0");
    UpsetPolynomials<R> out;
    out.upsets = poset.up_sets();
    const ElementSet omega = poset.full_set();
    for (const ElementSet& m : out.upsets)
        out.polys.push_back(pi_direct(poset, ring, params, omega, m));
    for (const auto& p : out.polys) {
        bool seen = false;
        for (const auto& q : out.distinct) seen = seen || poly_eq(ring, p, q);
        if (!seen) out.distinct.push_back(p);
    }
    return out;
}

struct UniformityReport {
    bool hierarchical = false;
    bool size_forces_equal = false;   // equal-size up-sets give equal pi
    bool equal_iff_size = false;      // pi equality is exactly size equality
    bool level_eta_uniform = false;   // hierarchical and eta constant on levels
    bool conditions_agree() const {
        return size_forces_equal == equal_iff_size && equal_iff_size == level_eta_uniform;
    }
    bool degree_evaluated = false;
    bool degree_by_size = false;      // equal sizes force equal degrees
    bool eta_multiset_evaluated = false;
    bool equal_iff_eta_multiset = false;
};

// Evaluates the three equivalent uniformity conditions independently, plus
// the degree criterion and (when hierarchical) the eta-multiset criterion.
template <class R>
UniformityReport uniformity_classification(const Poset& poset, const R& ring,
                                           const PiParams<R>& params) {
    if constexpr (!R::is_field) fail(Errc::not_a_field, "classification requires a field");
    require(params.tau_all_nonzero, Errc::zero_parameter, "requires nonzero tau");
    require(params.eta_all_not_minus_one, Errc::precondition, "requires eta_i != -1");

    const auto upsets = poset.up_sets();
    const ElementSet omega = poset.full_set();
    std::vector<RingPoly<R>> polys;
    for (const ElementSet& m : upsets)
        polys.push_back(pi_direct(poset, ring, params, omega, m));

    UniformityReport r;
    r.hierarchical = poset.is_hierarchical();
    r.size_forces_equal = r.equal_iff_size = true;
    for (std::size_t i = 0; i < upsets.size(); ++i)
        for (std::size_t j = i + 1; j < upsets.size(); ++j) {
            const bool same_size = upsets[i].size() == upsets[j].size();
            const bool same_poly = poly_eq(ring, polys[i], polys[j]);
            if (same_size && !same_poly) r.size_forces_equal = false;
            if (same_size != same_poly) r.equal_iff_size = false;
        }

    r.level_eta_uniform = r.hierarchical;
    for (int u = 0; u < poset.size(); ++u)
        for (int v = 0; v < poset.size(); ++v)
            if (poset.len_of(u) == poset.len_of(v) &&
                !ring.eq(params.eta[static_cast<std::size_t>(u)],
                         params.eta[static_cast<std::size_t>(v)]))
                r.level_eta_uniform = false;

    if (params.eta_all_nonzero) {
        r.degree_evaluated = true;
        r.degree_by_size = true;
        for (std::size_t i = 0; i < upsets.size(); ++i)
            for (std::size_t j = i + 1; j < upsets.size(); ++j)
                if (upsets[i].size() == upsets[j].size() &&
                    polys[i].degree() != polys[j].degree())
                    r.degree_by_size = false;
    }

    if (r.hierarchical) {
        r.eta_multiset_evaluated = true;
        r.equal_iff_eta_multiset = true;
        auto eta_multiset = [&](const ElementSet& m) {
            std::vector<typename R::Elem> v;
            for_each_element(m.bits,
                             [&](int i) { v.push_back(params.eta[static_cast<std::size_t>(i)]); });
            return v;
        };
        auto multiset_match = [&](std::vector<typename R::Elem> a,
                                  std::vector<typename R::Elem> b) {
            if (a.size() != b.size()) return false;
            for (const auto& x : a) {
                bool found = false;
                for (std::size_t k = 0; k < b.size() && !found; ++k)
                    if (ring.eq(b[k], x)) {
                        b.erase(b.begin() + static_cast<std::ptrdiff_t>(k));
                        found = true;
                    }
                if (!found) return false;
            }
            return true;
        };
        for (std::size_t i = 0; i < upsets.size(); ++i)
            for (std::size_t j = i + 1; j < upsets.size(); ++j) {
                const bool same_poly = poly_eq(ring, polys[i], polys[j]);
                const bool same_multiset =
                    multiset_match(eta_multiset(upsets[i]), eta_multiset(upsets[j]));
                if (same_poly != same_multiset) r.equal_iff_eta_multiset = false;
            }
    }
    return r;
}

}  // namespace posetfr
